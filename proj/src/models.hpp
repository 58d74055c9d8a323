#pragma once

#include "ode.hpp"
#include "transitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace ssde {

// A model's splitting into dX = [alpha + beta] dt + sigma dW:
// Step 1 integrates dX1 = beta dt + sigma dW exactly (`step1`), Step 2
// integrates dX2 = alpha dt deterministically. The full-equation
// coefficients are kept for the baseline schemes and for the registration
// identity check alpha + beta == full_drift.
struct SplitModel {
    std::string name;
    std::map<std::string, std::string> params; // effective parameters, canonical form

    TransitionSampler step1;
    DriftFn alpha;
    OdeMethod default_step2 = OdeMethod::ExplicitEuler;
    std::function<double(double x, double t, double dt)> exact_step2; // optional exact flow

    DriftFn beta;
    DriftFn full_drift;
    std::function<double(double x, double t)> diffusion;

    double domain_min = 0.0;
    bool domain_open = false; // x > domain_min required (x >= otherwise)

    // E[X(t) | X(0)=x0] where a closed form is known.
    std::function<double(double x0, double t)> exact_mean;

    // Pathwise reference value X(t_end) computed from the full fine-grid
    // increment sequence (exact solution formula, or the split scheme on
    // the fine grid where no closed form exists). Enables strong-error
    // measurement; absent for models whose Step 1 cannot be coupled.
    std::function<double(double x0, const std::vector<double>& dw, double dt_fine)>
        strong_reference;

    bool in_domain(double x) const {
        return domain_open ? x > domain_min : x >= domain_min;
    }
};

using ParamMap = std::map<std::string, std::string>;

// Catalog entries constructible by name. Unknown names and unknown or
// out-of-regime parameters are ParamErrors; the error message for an
// unknown name lists the catalog.
std::vector<std::string> model_names();
SplitModel make_model(const std::string& name, const ParamMap& params);

// Direct factories (the named catalog wraps these).
SplitModel model_test_eq();            // dX = (1+X) dt + 2 sqrt(X) dW, alpha = 1+X
SplitModel model_test_eq_bessel();     // same SDE, alpha = X, beta = 1 (Bessel flow Step 1)
SplitModel model_ginzburg_landau();    // dX = (X - X^3) dt + X dW
SplitModel model_cir(double a, double b, double sigma);
SplitModel model_cev(double mu, double sigma, double gamma, bool absorbing);
SplitModel model_linear_plus_drift(DriftFn alpha_fn, double lambda, double sigma);

// Drift rewrite f = alpha + beta with beta = sigma sigma' / 2, the Step-1
// part that pairs with an H-transform sampler.
struct SigmaSplit {
    DriftFn alpha;
    DriftFn beta;
};
SigmaSplit rewrite_sigma_split(const DriftFn& f,
                               const std::function<double(double)>& sigma,
                               const std::function<double(double)>& sigma_prime);

} // namespace ssde
