#pragma once

#include <cstdint>

namespace ssde {

// SplitMix64 finalizer (Stafford mix13). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Deterministic sub-seed derivation, used to hand out independent seed
// blocks (per dt-index, per run, ...) from one master seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(mix64(seed + kGolden) ^ (mix64(tag + 2 * kGolden) + kGolden));
}

// Above this Poisson mean, sampling switches from exact (transformed
// rejection) to a rounded normal approximation. Corresponds to the
// noncentrality guard lambda > 2 * kPoissonNormalApproxMean in the
// non-central chi-square sampler. Echoed by the CLI's --print-config.
constexpr double kPoissonNormalApproxMean = 5.0e7;

// Counter-based pseudorandom stream addressed by (seed, stream_id).
//
// The generator is SplitMix64 keyed by a hash of (seed, stream_id): the
// n-th raw word is mix64(key + n*golden). Identical (seed, stream_id)
// therefore reproduce the identical draw sequence on every run, streams
// are O(1) to create, and distinct stream ids share no state.
//
// Not shareable between concurrent tasks; create one stream per
// path/site instead.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64();

    // Uniform on (0, 1] (never 0, so log(uniform()) is finite).
    double uniform();

    // Standard normal, Box-Muller (cosine branch).
    double normal();

    // Poisson(mean). Inversion for mean < 10, transformed rejection (PTRD)
    // up to kPoissonNormalApproxMean, rounded normal approximation above.
    // mean < 0 is a parameter error.
    std::uint64_t poisson(double mean);

    // Gamma(shape, scale), shape > 0. Marsaglia-Tsang; the shape < 1 case
    // boosts through shape+1.
    double gamma_variate(double shape, double scale);

    // Central chi-square, dof > 0 (fractional dof allowed).
    double chi_square(double dof);

    // Non-central chi-square with dof d and noncentrality lambda >= 0,
    // extended to d in {0, -2, -4, ...}: draw K ~ Poisson(lambda/2) and
    // return chi2_{d+2K}, with the convention that d+2K <= 0 yields
    // exactly 0 (the atom at the origin). d > 0 may be fractional;
    // d <= 0 must be an even integer.
    double noncentral_chi_square(double d, double lambda);

private:
    std::uint64_t poisson_inversion(double mean);
    std::uint64_t poisson_ptrd(double mean);

    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
};

// True iff d is acceptable for noncentral_chi_square: d > 0, or d an even
// nonpositive integer.
bool ncx2_dof_valid(double d);

} // namespace ssde
