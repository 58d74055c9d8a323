#include "harness.hpp"

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

#include <cmath>

namespace ssde {

namespace {

std::int64_t steps_for(double t, double dt, const char* who) {
    if (!(dt > 0.0) || !(t > 0.0)) {
        throw ConfigError(std::string(who) + ": need t > 0 and dt > 0");
    }
    const auto n = static_cast<std::int64_t>(std::llround(t / dt));
    if (n < 1 || std::fabs(static_cast<double>(n) * dt - t) > 1e-9 * std::max(1.0, t)) {
        throw ConfigError(std::string(who) + ": dt must divide t");
    }
    return n;
}

} // namespace

WeakErrorPoint weak_error(const SplitModel& model, const Scheme& scheme, double x0, double t,
                          double dt, std::int64_t n_paths, std::uint64_t seed, int threads) {
    if (!model.exact_mean) {
        throw UnsupportedError("weak_error: model " + model.name + " has no exact mean");
    }
    if (n_paths < 2) {
        throw ConfigError("weak_error: need at least 2 paths");
    }
    const std::int64_t n_steps = steps_for(t, dt, "weak_error");

    std::vector<double> values(static_cast<std::size_t>(n_paths));
    parallel_for(n_paths, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t p = begin; p < end; ++p) {
            RngStream rng(seed, static_cast<std::uint64_t>(p));
            double x = x0;
            double time = 0.0;
            for (std::int64_t i = 0; i < n_steps; ++i) {
                x = scheme.advance(x, time, dt, rng);
                time += dt;
            }
            values[static_cast<std::size_t>(p)] = x;
        }
    });

    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(n_paths);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n_paths - 1));

    WeakErrorPoint out;
    out.sample_mean = mean;
    out.exact_mean = model.exact_mean(x0, t);
    out.error = std::fabs(mean - out.exact_mean);
    out.std_error = sd / std::sqrt(static_cast<double>(n_paths));
    return out;
}

ErrorSeries strong_error(const SplitModel& model, const Scheme& scheme, double x0, double t,
                         const std::vector<double>& dt_list, int k, std::int64_t n_paths,
                         std::uint64_t seed, int threads) {
    if (!model.strong_reference) {
        throw UnsupportedError("strong_error: model " + model.name +
                               " has no pathwise reference");
    }
    if (!scheme.couplable()) {
        throw UnsupportedError("strong_error: scheme " + scheme.name +
                               " cannot consume coupled increments");
    }
    if (k != 1 && k != 2) {
        throw ConfigError("strong_error: k must be 1 or 2");
    }
    if (dt_list.empty()) {
        throw ConfigError("strong_error: empty dt list");
    }
    if (n_paths < 2) {
        throw ConfigError("strong_error: need at least 2 paths");
    }

    double dt_max = 0.0;
    for (double dt : dt_list) dt_max = std::max(dt_max, dt);
    const double dt_fine = dt_max / static_cast<double>(kStrongReferenceRefinement);
    const std::int64_t n_fine = steps_for(t, dt_fine, "strong_error");

    const std::size_t n_dt = dt_list.size();
    std::vector<std::int64_t> n_steps(n_dt);
    std::vector<std::int64_t> fine_per_step(n_dt);
    for (std::size_t i = 0; i < n_dt; ++i) {
        n_steps[i] = steps_for(t, dt_list[i], "strong_error");
        const auto m = static_cast<std::int64_t>(std::llround(dt_list[i] / dt_fine));
        if (m < 1 || std::fabs(static_cast<double>(m) * dt_fine - dt_list[i]) >
                         1e-9 * dt_list[i]) {
            throw ConfigError("strong_error: dt values must be commensurate "
                              "(integer multiples of the reference grid)");
        }
        fine_per_step[i] = m;
    }

    std::vector<std::vector<double>> pow_err(n_dt,
                                             std::vector<double>(static_cast<std::size_t>(n_paths)));
    parallel_for(n_paths, threads, [&](std::int64_t begin, std::int64_t end) {
        std::vector<double> dw(static_cast<std::size_t>(n_fine));
        for (std::int64_t p = begin; p < end; ++p) {
            RngStream rng(seed, static_cast<std::uint64_t>(p));
            const double root_dt = std::sqrt(dt_fine);
            for (auto& w : dw) w = root_dt * rng.normal();
            const double ref = model.strong_reference(x0, dw, dt_fine);
            for (std::size_t i = 0; i < n_dt; ++i) {
                double x = x0;
                double time = 0.0;
                std::size_t idx = 0;
                for (std::int64_t s = 0; s < n_steps[i]; ++s) {
                    double w_sum = 0.0;
                    for (std::int64_t j = 0; j < fine_per_step[i]; ++j) {
                        w_sum += dw[idx++];
                    }
                    x = scheme.advance_increment(x, time, dt_list[i], w_sum);
                    time += dt_list[i];
                }
                const double d = std::fabs(x - ref);
                pow_err[i][static_cast<std::size_t>(p)] = (k == 1) ? d : d * d;
            }
        }
    });

    ErrorSeries out;
    out.dt = dt_list;
    out.error.resize(n_dt);
    out.std_error.resize(n_dt);
    for (std::size_t i = 0; i < n_dt; ++i) {
        double sum = 0.0;
        for (double v : pow_err[i]) sum += v;
        const double mean = sum / static_cast<double>(n_paths);
        double ss = 0.0;
        for (double v : pow_err[i]) ss += (v - mean) * (v - mean);
        const double se_mean =
            std::sqrt(ss / static_cast<double>(n_paths - 1) / static_cast<double>(n_paths));
        if (k == 1) {
            out.error[i] = mean;
            out.std_error[i] = se_mean;
        } else {
            out.error[i] = std::sqrt(mean);
            // delta method through x -> sqrt(x)
            out.std_error[i] = mean > 0.0 ? 0.5 * se_mean / std::sqrt(mean) : 0.0;
        }
    }
    return out;
}

OrderFit fit_order(const ErrorSeries& series) {
    const std::size_t n = series.dt.size();
    if (n < 3 || series.error.size() != n) {
        throw ConfigError("fit_order: need at least 3 (dt, error) points");
    }
    double max_err = 0.0;
    for (double e : series.error) max_err = std::max(max_err, std::fabs(e));
    if (max_err < kDegenerateErrorFloor) {
        OrderFit f;
        f.degenerate = true;
        f.slope = f.half_width = f.intercept = std::nan("");
        return f;
    }
    for (double e : series.error) {
        if (!(e > 0.0)) {
            throw ParamError("fit_order: errors must be positive");
        }
    }

    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += std::log(series.dt[i]);
        sy += std::log(series.error[i]);
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(series.dt[i]) - mx;
        const double dy = std::log(series.error[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    OrderFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r =
            std::log(series.error[i]) - (f.intercept + f.slope * std::log(series.dt[i]));
        ssr += r * r;
    }
    const double s2 = ssr / static_cast<double>(n - 2);
    f.half_width = 2.0 * std::sqrt(s2 / sxx);
    return f;
}

} // namespace ssde
