#pragma once

#include "scheme.hpp"

#include <cstdint>

namespace ssde {

// (dt, error, std-error) triples from a convergence study.
struct ErrorSeries {
    std::vector<double> dt;
    std::vector<double> error;
    std::vector<double> std_error;
};

struct OrderFit {
    double slope = 0.0;
    double half_width = 0.0; // 2x the regression slope standard error
    double intercept = 0.0;
    bool degenerate = false; // all errors at machine-noise floor, fit meaningless
};

struct WeakErrorPoint {
    double error = 0.0;
    double std_error = 0.0;
    double sample_mean = 0.0;
    double exact_mean = 0.0;
};

// |E X~(t) - E X(t)| with the model's exact-mean oracle; requires
// model.exact_mean. One stream per path; the caller hands out independent
// seeds per dt (derive_seed).
WeakErrorPoint weak_error(const SplitModel& model, const Scheme& scheme, double x0, double t,
                          double dt, std::int64_t n_paths, std::uint64_t seed, int threads);

// Pathwise L^k error at final time t against the model's fine-grid
// reference, k in {1, 2}. One fine Wiener path per sample path; every
// coarse grid consumes sums of the same fine increments (common random
// numbers), so the reference and all dt values are coupled.
ErrorSeries strong_error(const SplitModel& model, const Scheme& scheme, double x0, double t,
                         const std::vector<double>& dt_list, int k, std::int64_t n_paths,
                         std::uint64_t seed, int threads);

// Ratio between the coarsest tested dt and the reference grid.
constexpr int kStrongReferenceRefinement = 256;

// Largest |error| that is still treated as an exact-scheme noise floor.
constexpr double kDegenerateErrorFloor = 1e-12;

// Ordinary least squares of log(error) on log(dt). Needs >= 3 points and
// strictly positive errors; a series entirely below the noise floor comes
// back flagged degenerate instead of fitted.
OrderFit fit_order(const ErrorSeries& series);

} // namespace ssde
