#pragma once

#include <functional>
#include <string>

namespace ssde {

// Step-2 drift, alpha(x, t).
using DriftFn = std::function<double(double x, double t)>;

enum class OdeMethod {
    ExplicitEuler,
    Heun,
    Rk4,
    GlNonstandard, // partial-implicit closed form for the cubic decay drift -x^3
};

OdeMethod ode_method_from_name(const std::string& name);
const char* ode_method_name(OdeMethod m);

// One deterministic step of dx/dt = alpha(x, t). GlNonstandard ignores
// alpha: it is the closed-form solve of
//   x' = x - (dt/2) x^2 (x + x'),
// i.e. x' = x (1 - dt x^2 / 2) / (1 + dt x^2 / 2), which preserves x' >= 0
// whenever x^2 dt < 2.
double ode_step(OdeMethod m, const DriftFn& alpha, double x, double t, double dt);

double gl_nonstandard_step(double x, double dt);

} // namespace ssde
