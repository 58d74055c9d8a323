#include "rng.hpp"

#include "errors.hpp"

#include <cmath>

namespace ssde {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    const std::uint64_t a = mix64(seed + kGolden);
    key_ = mix64(a ^ (mix64(stream_id + a) + kGolden));
}

std::uint64_t RngStream::next_u64() {
    ctr_ += 1;
    return mix64(key_ + ctr_ * kGolden);
}

double RngStream::uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::uint64_t RngStream::poisson(double mean) {
    if (!(mean >= 0.0)) {
        throw ParamError("poisson: mean must be >= 0");
    }
    if (mean == 0.0) {
        return 0;
    }
    if (mean < 10.0) {
        return poisson_inversion(mean);
    }
    if (mean <= kPoissonNormalApproxMean) {
        return poisson_ptrd(mean);
    }
    const double k = std::round(mean + std::sqrt(mean) * normal());
    return k <= 0.0 ? 0 : static_cast<std::uint64_t>(k);
}

std::uint64_t RngStream::poisson_inversion(double mean) {
    const double u = uniform();
    double p = std::exp(-mean);
    double cum = p;
    std::uint64_t k = 0;
    while (u > cum) {
        k += 1;
        p *= mean / static_cast<double>(k);
        cum += p;
        if (k > 2000) break; // cum == 1 to machine precision long before this
    }
    return k;
}

// Hormann's PTRD transformed-rejection sampler, valid for mean >= 10.
std::uint64_t RngStream::poisson_ptrd(double mean) {
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mu = std::log(mean);

    for (;;) {
        double u = uniform() - 0.5;
        double v = uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::uint64_t>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double t = a / (us * us) + b;
        if (std::log(v * inv_alpha / t) <= kf * log_mu - mean - std::lgamma(kf + 1.0)) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

double RngStream::gamma_variate(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw ParamError("gamma_variate: shape and scale must be > 0");
    }
    if (shape < 1.0) {
        // boost: Gamma(a) = Gamma(a+1) * U^{1/a}
        const double g = gamma_variate(shape + 1.0, 1.0);
        const double u = uniform();
        return scale * g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return scale * d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return scale * d * v;
        }
    }
}

double RngStream::chi_square(double dof) {
    if (!(dof > 0.0)) {
        throw ParamError("chi_square: dof must be > 0");
    }
    return gamma_variate(0.5 * dof, 2.0);
}

bool ncx2_dof_valid(double d) {
    if (d > 0.0) {
        return std::isfinite(d);
    }
    const double r = std::round(d / 2.0);
    return std::isfinite(d) && r * 2.0 == d;
}

double RngStream::noncentral_chi_square(double d, double lambda) {
    if (!ncx2_dof_valid(d)) {
        throw ParamError("noncentral_chi_square: d must be > 0 or an even nonpositive integer");
    }
    if (!(lambda >= 0.0)) {
        throw ParamError("noncentral_chi_square: lambda must be >= 0");
    }
    const std::uint64_t k = poisson(0.5 * lambda);
    const double dof = d + 2.0 * static_cast<double>(k);
    if (d <= 0.0 && dof <= 0.0) {
        return 0.0;
    }
    return chi_square(dof);
}

} // namespace ssde
