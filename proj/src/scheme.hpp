#pragma once

#include "models.hpp"

#include <span>
#include <vector>

namespace ssde {

enum class SchemeKind {
    Split,                  // Step 1 exact transition, then Step 2 deterministic
    EulerMaruyama,          // full-drift Euler with sigma(x) dW
    AbsSqrtEuler,           // Euler-Maruyama with sigma evaluated at |x|
    SplitStepBackwardEuler, // drift-implicit stage, then diffusion increment
};

SchemeKind scheme_kind_from_name(const std::string& name);
const char* scheme_kind_name(SchemeKind k);
std::vector<std::string> scheme_names();

// A one-step time advance bound to a model. `advance` draws through the
// stream; `advance_increment` consumes an externally supplied Wiener
// increment and exists only when the scheme can be coupled across grids
// (couplable() true).
struct Scheme {
    std::string name;
    SchemeKind kind = SchemeKind::Split;
    OdeMethod step2 = OdeMethod::ExplicitEuler;
    bool exact_step2 = false;

    std::function<double(double x, double t, double dt, RngStream&)> advance;
    std::function<double(double x, double t, double dt, double dw)> advance_increment;

    bool couplable() const { return static_cast<bool>(advance_increment); }
};

// step2_override: "" keeps the model default; otherwise one of
// euler | heun | rk4 | gl-nonstandard | exact ("exact" requires the model
// to carry a closed-form Step-2 flow).
Scheme make_scheme(const SplitModel& model, const std::string& scheme_name,
                   const std::string& step2_override = "");

// Path along a strictly increasing time grid; element 0 is x0. Any
// sub-step failure aborts with the step index and time in the message.
std::vector<double> simulate_path(const SplitModel& model, const Scheme& scheme, double x0,
                                  std::span<const double> t_grid, RngStream& rng);

// Max iterations / tolerance of the backward-Euler implicit stage.
constexpr int kImplicitMaxIter = 100;
constexpr double kImplicitTol = 1e-12;

} // namespace ssde
