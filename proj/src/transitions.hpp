#pragma once

#include "rng.hpp"

#include <functional>

namespace ssde {

// Feller boundary character of a one-step transition sampler at the lower
// boundary of its domain.
enum class BoundaryClass {
    Natural,      // unattainable in finite time
    Absorbing,    // attainable, zero is a fixed point
    Reflecting,   // attainable, instantaneously re-enters
    Unattainable, // positive and bounded away from the boundary pathwise
};

const char* boundary_class_name(BoundaryClass b);

// dX = a dt + sigma sqrt(X) dW  (squared Bessel family, dof d = 4a/sigma^2).
// One exact step: (sigma^2 dt / 4) * ncx2(d, 4x / (sigma^2 dt)).
struct SquaredBesselParams {
    double a = 0.0;     // >= 0
    double sigma = 1.0; // > 0

    double dof() const { return 4.0 * a / (sigma * sigma); }
};

double squared_bessel_step(const SquaredBesselParams& p, double x, double dt, RngStream& rng);

// dX = sqrt(s X) dW. Equivalent to the squared Bessel step with a = 0,
// sigma = sqrt(s); the dof-0 transition has an atom at zero with mass
// exp(-2x / (s dt)). This is the per-site transition of the lattice SPDEs
// (s = sigma / dx^dims there).
double sqrt_diffusion_step(double s, double x, double dt, RngStream& rng);

// dX = drift X dt + sigma X dW, exact lognormal step. x > 0 required.
double gbm_step(double drift, double sigma, double x, double dt, RngStream& rng);
// Same map driven by an externally supplied Wiener increment.
double gbm_step_increment(double drift, double sigma, double x, double dt, double dW);

// Flow map of dX = dt + 2 sqrt(X) dW: x -> (sqrt(x) + dW)^2. Exact in
// distribution (equals dt * ncx2(1, x/dt)) and pathwise while the flow
// stays nonnegative.
double bessel_flow_step(double x, double dW);

// Driftless CEV sub-equation dX = sigma X^gamma dW.
//
// Admissible regimes:
//   gamma > 1                      natural boundary, dof = (1-2g)/(1-g) > 2
//   1/2 <= gamma < 1, absorbing    requires gamma = 1 - 1/(2n); dof = 2-2n
//   0 <= gamma < 1/2, reflecting   dof = (1-2g)/(1-g) in (0, 1]
// gamma == 1 is rejected (use gbm_step). The absorbing choice for
// gamma < 1/2 is not supported.
struct CevParams {
    double gamma = 0.0;
    double sigma = 1.0;
    bool absorbing = false; // boundary choice where one exists

    // Throws ParamError unless the (gamma, sigma, absorbing) triple is one
    // of the admissible regimes above.
    void validate() const;
    double dof() const { return (1.0 - 2.0 * gamma) / (1.0 - gamma); }
};

double cev_step(const CevParams& p, double x, double dt, RngStream& rng);

// One-step absorption probability of the absorbing CEV regime from state x:
// the Poisson mass P[K <= |d|/2] = sum_{j<=|d|/2} e^{-l/2} (l/2)^j / j!.
double cev_absorption_probability(const CevParams& p, double x, double dt);

// Monotone-transform step: x -> Hinv(H(x) + sqrt(dt) z), the exact flow of
// dX = sigma(X) dW when H' = 1/sigma.
using ScalarMap = std::function<double(double)>;
double h_transform_step(const ScalarMap& h, const ScalarMap& h_inv, double x, double dt,
                        RngStream& rng);
double h_transform_step_increment(const ScalarMap& h, const ScalarMap& h_inv, double x, double dW);

// A named exact one-step transition (Step 1 of the splitting scheme).
// `sample` draws through the stream; `pathwise`, when set, applies the same
// map to a caller-supplied Wiener increment and enables strong-error
// coupling across grids.
struct TransitionSampler {
    std::string name;
    BoundaryClass boundary = BoundaryClass::Natural;
    std::function<double(double x, double t, double dt, RngStream&)> sample;
    std::function<double(double x, double t, double dt, double dW)> pathwise; // optional

    bool couplable() const { return static_cast<bool>(pathwise); }
};

TransitionSampler make_squared_bessel_sampler(SquaredBesselParams p);
TransitionSampler make_sqrt_diffusion_sampler(double s);
TransitionSampler make_gbm_sampler(double drift, double sigma);
TransitionSampler make_bessel_flow_sampler();
TransitionSampler make_cev_sampler(CevParams p);
TransitionSampler make_identity_sampler(); // Step 1 that does nothing (sigma = 0 models)

} // namespace ssde
