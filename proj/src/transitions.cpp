#include "transitions.hpp"

#include "errors.hpp"

#include <cmath>
#include <string>

namespace ssde {

const char* boundary_class_name(BoundaryClass b) {
    switch (b) {
        case BoundaryClass::Natural: return "natural";
        case BoundaryClass::Absorbing: return "absorbing";
        case BoundaryClass::Reflecting: return "reflecting";
        case BoundaryClass::Unattainable: return "unattainable";
    }
    return "?";
}

namespace {

void check_state(double x, double dt, const char* who) {
    if (!(x >= 0.0)) {
        throw DomainError(std::string(who) + ": state must be >= 0");
    }
    if (!(dt > 0.0)) {
        throw ParamError(std::string(who) + ": dt must be > 0");
    }
}

} // namespace

double squared_bessel_step(const SquaredBesselParams& p, double x, double dt, RngStream& rng) {
    if (!(p.a >= 0.0) || !(p.sigma > 0.0)) {
        throw ParamError("squared_bessel_step: need a >= 0 and sigma > 0");
    }
    check_state(x, dt, "squared_bessel_step");
    const double scale = 0.25 * p.sigma * p.sigma * dt;
    const double lambda = x / scale;
    return scale * rng.noncentral_chi_square(p.dof(), lambda);
}

double sqrt_diffusion_step(double s, double x, double dt, RngStream& rng) {
    if (!(s > 0.0)) {
        throw ParamError("sqrt_diffusion_step: diffusion scale must be > 0");
    }
    check_state(x, dt, "sqrt_diffusion_step");
    const double scale = 0.25 * s * dt;
    return scale * rng.noncentral_chi_square(0.0, x / scale);
}

double gbm_step(double drift, double sigma, double x, double dt, RngStream& rng) {
    return gbm_step_increment(drift, sigma, x, dt, std::sqrt(dt) * rng.normal());
}

double gbm_step_increment(double drift, double sigma, double x, double dt, double dW) {
    if (!(x > 0.0)) {
        throw DomainError("gbm_step: state must be > 0");
    }
    if (!(dt > 0.0)) {
        throw ParamError("gbm_step: dt must be > 0");
    }
    return x * std::exp((drift - 0.5 * sigma * sigma) * dt + sigma * dW);
}

double bessel_flow_step(double x, double dW) {
    if (!(x >= 0.0)) {
        throw DomainError("bessel_flow_step: state must be >= 0");
    }
    const double r = std::sqrt(x) + dW;
    return r * r;
}

void CevParams::validate() const {
    if (!(sigma > 0.0)) {
        throw ParamError("cev: sigma must be > 0");
    }
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw ParamError("cev: gamma must be finite and >= 0");
    }
    if (gamma == 1.0) {
        throw ParamError("cev: gamma == 1 is geometric Brownian motion; use gbm_step");
    }
    if (gamma > 1.0) {
        return; // natural boundary, no choice to make
    }
    if (gamma >= 0.5) {
        // absorbing regime; only gamma = 1 - 1/(2n) admits exact sampling
        if (!absorbing) {
            throw ParamError("cev: boundary is absorbing for 1/2 <= gamma < 1");
        }
        const double n_real = 0.5 / (1.0 - gamma);
        const double n = std::round(n_real);
        if (!(n >= 1.0) || std::fabs(n - n_real) > 1e-9) {
            throw ParamError("cev: absorbing regime requires gamma = 1 - 1/(2n) for integer n");
        }
        return;
    }
    // 0 <= gamma < 1/2: regular boundary, a condition must be chosen
    if (absorbing) {
        throw ParamError("cev: absorbing boundary for gamma < 1/2 is not supported "
                         "(needs rejection/transformation sampling)");
    }
}

namespace {

BoundaryClass cev_boundary(const CevParams& p) {
    if (p.gamma > 1.0) return BoundaryClass::Natural;
    if (p.gamma >= 0.5) return BoundaryClass::Absorbing;
    return BoundaryClass::Reflecting;
}

// Even-integer dof for the absorbing regime, ordinary dof otherwise.
double cev_dof(const CevParams& p) {
    if (p.gamma >= 0.5 && p.gamma < 1.0) {
        const double n = std::round(0.5 / (1.0 - p.gamma));
        return 2.0 - 2.0 * n;
    }
    return p.dof();
}

} // namespace

double cev_step(const CevParams& p, double x, double dt, RngStream& rng) {
    p.validate();
    check_state(x, dt, "cev_step");
    const double one_mg = 1.0 - p.gamma;
    if (p.gamma > 1.0 && x == 0.0) {
        throw DomainError("cev_step: x = 0 is unattainable for gamma > 1");
    }
    const double scale = one_mg * one_mg * p.sigma * p.sigma * dt;
    const double lambda = std::pow(x, 2.0 * one_mg) / scale;
    const double z = rng.noncentral_chi_square(cev_dof(p), lambda);
    if (z == 0.0) {
        if (cev_boundary(p) == BoundaryClass::Absorbing) {
            return 0.0;
        }
        throw NumericError("cev_step: chi-square draw underflowed to 0");
    }
    return std::pow(scale * z, 0.5 / one_mg);
}

double cev_absorption_probability(const CevParams& p, double x, double dt) {
    p.validate();
    if (cev_boundary(p) != BoundaryClass::Absorbing) {
        throw ParamError("cev_absorption_probability: regime is not absorbing");
    }
    check_state(x, dt, "cev_absorption_probability");
    const double one_mg = 1.0 - p.gamma;
    const double scale = one_mg * one_mg * p.sigma * p.sigma * dt;
    const double half_lambda = 0.5 * std::pow(x, 2.0 * one_mg) / scale;
    const auto j_max = static_cast<std::uint64_t>(std::llround(-cev_dof(p) / 2.0));
    double term = std::exp(-half_lambda);
    double sum = term;
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        term *= half_lambda / static_cast<double>(j);
        sum += term;
    }
    return sum;
}

double h_transform_step(const ScalarMap& h, const ScalarMap& h_inv, double x, double dt,
                        RngStream& rng) {
    if (!(dt > 0.0)) {
        throw ParamError("h_transform_step: dt must be > 0");
    }
    return h_transform_step_increment(h, h_inv, x, std::sqrt(dt) * rng.normal());
}

double h_transform_step_increment(const ScalarMap& h, const ScalarMap& h_inv, double x,
                                  double dW) {
    const double y = h(x);
    if (!std::isfinite(y)) {
        throw DomainError("h_transform_step: H(x) is not finite");
    }
    return h_inv(y + dW);
}

TransitionSampler make_squared_bessel_sampler(SquaredBesselParams p) {
    if (!(p.a >= 0.0) || !(p.sigma > 0.0)) {
        throw ParamError("squared_bessel sampler: need a >= 0 and sigma > 0");
    }
    const double d = p.dof();
    BoundaryClass b = BoundaryClass::Reflecting;
    if (d == 0.0) {
        b = BoundaryClass::Absorbing;
    } else if (d >= 2.0) {
        b = BoundaryClass::Unattainable; // a >= sigma^2/2
    }
    TransitionSampler s;
    s.name = "squared-bessel";
    s.boundary = b;
    s.sample = [p](double x, double, double dt, RngStream& rng) {
        return squared_bessel_step(p, x, dt, rng);
    };
    return s;
}

TransitionSampler make_sqrt_diffusion_sampler(double s_scale) {
    TransitionSampler s;
    s.name = "sqrt-diffusion";
    s.boundary = BoundaryClass::Absorbing;
    s.sample = [s_scale](double x, double, double dt, RngStream& rng) {
        return sqrt_diffusion_step(s_scale, x, dt, rng);
    };
    return s;
}

TransitionSampler make_gbm_sampler(double drift, double sigma) {
    TransitionSampler s;
    s.name = "gbm";
    s.boundary = BoundaryClass::Natural;
    s.sample = [drift, sigma](double x, double, double dt, RngStream& rng) {
        return gbm_step(drift, sigma, x, dt, rng);
    };
    s.pathwise = [drift, sigma](double x, double, double dt, double dW) {
        return gbm_step_increment(drift, sigma, x, dt, dW);
    };
    return s;
}

TransitionSampler make_bessel_flow_sampler() {
    TransitionSampler s;
    s.name = "bessel-flow";
    s.boundary = BoundaryClass::Reflecting; // dof 1 < 2
    s.sample = [](double x, double, double dt, RngStream& rng) {
        return bessel_flow_step(x, std::sqrt(dt) * rng.normal());
    };
    s.pathwise = [](double x, double, double, double dW) { return bessel_flow_step(x, dW); };
    return s;
}

TransitionSampler make_cev_sampler(CevParams p) {
    p.validate();
    TransitionSampler s;
    s.name = "cev";
    s.boundary = cev_boundary(p);
    s.sample = [p](double x, double, double dt, RngStream& rng) {
        return cev_step(p, x, dt, rng);
    };
    return s;
}

TransitionSampler make_identity_sampler() {
    TransitionSampler s;
    s.name = "identity";
    s.boundary = BoundaryClass::Natural;
    s.sample = [](double x, double, double, RngStream&) { return x; };
    s.pathwise = [](double x, double, double, double) { return x; };
    return s;
}

} // namespace ssde
