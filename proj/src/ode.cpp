#include "ode.hpp"

#include "errors.hpp"

namespace ssde {

OdeMethod ode_method_from_name(const std::string& name) {
    if (name == "euler") return OdeMethod::ExplicitEuler;
    if (name == "heun") return OdeMethod::Heun;
    if (name == "rk4") return OdeMethod::Rk4;
    if (name == "gl-nonstandard") return OdeMethod::GlNonstandard;
    throw ParamError("unknown ODE method '" + name + "' (euler, heun, rk4, gl-nonstandard)");
}

const char* ode_method_name(OdeMethod m) {
    switch (m) {
        case OdeMethod::ExplicitEuler: return "euler";
        case OdeMethod::Heun: return "heun";
        case OdeMethod::Rk4: return "rk4";
        case OdeMethod::GlNonstandard: return "gl-nonstandard";
    }
    return "?";
}

double gl_nonstandard_step(double x, double dt) {
    const double h = 0.5 * dt * x * x;
    return x * (1.0 - h) / (1.0 + h);
}

double ode_step(OdeMethod m, const DriftFn& alpha, double x, double t, double dt) {
    switch (m) {
        case OdeMethod::ExplicitEuler:
            return x + dt * alpha(x, t);
        case OdeMethod::Heun: {
            const double k1 = alpha(x, t);
            const double k2 = alpha(x + dt * k1, t + dt);
            return x + 0.5 * dt * (k1 + k2);
        }
        case OdeMethod::Rk4: {
            const double k1 = alpha(x, t);
            const double k2 = alpha(x + 0.5 * dt * k1, t + 0.5 * dt);
            const double k3 = alpha(x + 0.5 * dt * k2, t + 0.5 * dt);
            const double k4 = alpha(x + dt * k3, t + dt);
            return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        case OdeMethod::GlNonstandard:
            return gl_nonstandard_step(x, dt);
    }
    throw ParamError("ode_step: bad method");
}

} // namespace ssde
