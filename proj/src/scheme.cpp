#include "scheme.hpp"

#include "errors.hpp"

#include <cmath>

namespace ssde {

SchemeKind scheme_kind_from_name(const std::string& name) {
    if (name == "split") return SchemeKind::Split;
    if (name == "euler-maruyama") return SchemeKind::EulerMaruyama;
    if (name == "abs-sqrt-euler") return SchemeKind::AbsSqrtEuler;
    if (name == "split-step-backward-euler") return SchemeKind::SplitStepBackwardEuler;
    throw ParamError("unknown scheme '" + name +
                     "' (split, euler-maruyama, abs-sqrt-euler, split-step-backward-euler)");
}

const char* scheme_kind_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::Split: return "split";
        case SchemeKind::EulerMaruyama: return "euler-maruyama";
        case SchemeKind::AbsSqrtEuler: return "abs-sqrt-euler";
        case SchemeKind::SplitStepBackwardEuler: return "split-step-backward-euler";
    }
    return "?";
}

std::vector<std::string> scheme_names() {
    return {"split", "euler-maruyama", "abs-sqrt-euler", "split-step-backward-euler"};
}

namespace {

// Damped fixed-point solve of y = x + dt * f(y, t).
double implicit_drift_stage(const DriftFn& f, double x, double t, double dt) {
    double y = x;
    for (int i = 0; i < kImplicitMaxIter; ++i) {
        const double next = x + dt * f(y, t);
        const double y_new = 0.5 * (y + next);
        if (std::fabs(y_new - y) <= kImplicitTol * std::max(1.0, std::fabs(y_new))) {
            return y_new;
        }
        if (!std::isfinite(y_new)) break;
        y = y_new;
    }
    throw NumericError("backward-euler implicit stage did not converge");
}

} // namespace

Scheme make_scheme(const SplitModel& model, const std::string& scheme_name,
                   const std::string& step2_override) {
    Scheme s;
    s.kind = scheme_kind_from_name(scheme_name);
    s.name = scheme_name;

    if (s.kind == SchemeKind::Split) {
        s.step2 = model.default_step2;
        if (!step2_override.empty()) {
            if (step2_override == "exact") {
                if (!model.exact_step2) {
                    throw ParamError("model " + model.name + " has no exact Step-2 flow");
                }
                s.exact_step2 = true;
            } else {
                s.step2 = ode_method_from_name(step2_override);
            }
        }
        const auto step1 = model.step1;
        const auto alpha = model.alpha;
        const auto exact2 = model.exact_step2;
        const auto method = s.step2;
        const bool use_exact = s.exact_step2;
        auto apply_step2 = [alpha, exact2, method, use_exact](double x, double t, double dt) {
            return use_exact ? exact2(x, t, dt) : ode_step(method, alpha, x, t, dt);
        };
        s.advance = [step1, apply_step2](double x, double t, double dt, RngStream& rng) {
            return apply_step2(step1.sample(x, t, dt, rng), t, dt);
        };
        if (step1.couplable()) {
            auto pathwise = step1.pathwise;
            s.advance_increment = [pathwise, apply_step2](double x, double t, double dt,
                                                          double dw) {
                return apply_step2(pathwise(x, t, dt, dw), t, dt);
            };
        }
        return s;
    }

    if (!step2_override.empty()) {
        throw ParamError("step2 override applies to the split scheme only");
    }
    const auto drift = model.full_drift;
    const auto sigma = model.diffusion;

    switch (s.kind) {
        case SchemeKind::EulerMaruyama:
            s.advance_increment = [drift, sigma](double x, double t, double dt, double dw) {
                return x + drift(x, t) * dt + sigma(x, t) * dw;
            };
            break;
        case SchemeKind::AbsSqrtEuler:
            s.advance_increment = [drift, sigma](double x, double t, double dt, double dw) {
                return x + drift(x, t) * dt + sigma(std::fabs(x), t) * dw;
            };
            break;
        case SchemeKind::SplitStepBackwardEuler:
            s.advance_increment = [drift, sigma](double x, double t, double dt, double dw) {
                const double stage = implicit_drift_stage(drift, x, t, dt);
                return stage + sigma(stage, t) * dw;
            };
            break;
        default:
            break;
    }
    const auto inc = s.advance_increment;
    s.advance = [inc](double x, double t, double dt, RngStream& rng) {
        return inc(x, t, dt, std::sqrt(dt) * rng.normal());
    };
    return s;
}

std::vector<double> simulate_path(const SplitModel& model, const Scheme& scheme, double x0,
                                  std::span<const double> t_grid, RngStream& rng) {
    if (t_grid.size() < 1) {
        throw ParamError("simulate_path: empty time grid");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw ParamError("simulate_path: time grid must be strictly increasing");
        }
    }
    if (!model.in_domain(x0)) {
        throw DomainError("simulate_path: x0 outside the model domain");
    }
    std::vector<double> path;
    path.reserve(t_grid.size());
    path.push_back(x0);
    double x = x0;
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
        const double t = t_grid[i];
        const double dt = t_grid[i + 1] - t;
        try {
            x = scheme.advance(x, t, dt, rng);
        } catch (const std::exception& e) {
            throw NumericError("simulate_path: step " + std::to_string(i) + " (t=" +
                               std::to_string(t) + "): " + e.what());
        }
        path.push_back(x);
    }
    return path;
}

} // namespace ssde
