#include "models.hpp"

#include "errors.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace ssde {

namespace {

std::string num_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Reads declared keys from a ParamMap and rejects leftovers, so typos and
// out-of-place parameters fail before any computation starts.
class ParamReader {
public:
    ParamReader(std::string model, const ParamMap& m) : model_(std::move(model)), map_(m) {}

    double num(const std::string& key, double fallback) {
        auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        used_.insert(key);
        return parse(it->second, key);
    }

    double num_required(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end()) {
            throw ParamError(model_ + ": parameter '" + key + "' is required");
        }
        used_.insert(key);
        return parse(it->second, key);
    }

    std::string str(const std::string& key, const std::string& fallback) {
        auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        used_.insert(key);
        return it->second;
    }

    void finish() const {
        for (const auto& [k, v] : map_) {
            if (!used_.count(k)) {
                throw ParamError(model_ + ": unknown parameter '" + k + "'");
            }
        }
    }

private:
    double parse(const std::string& text, const std::string& key) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw ParamError(model_ + ": parameter '" + key + "' is not a number: '" + text +
                             "'");
        }
    }

    std::string model_;
    ParamMap map_;
    std::set<std::string> used_;
};

// Registration identity: alpha + beta must reproduce the full drift on a
// grid of (x, t) points to 1e-12.
void check_split_identity(const SplitModel& m) {
    const double xs[] = {0.25, 0.5, 1.0, 2.0, 3.75, 5.0};
    const double ts[] = {0.0, 0.7};
    for (double x : xs) {
        for (double t : ts) {
            const double lhs = m.alpha(x, t) + m.beta(x, t);
            const double rhs = m.full_drift(x, t);
            if (std::fabs(lhs - rhs) > 1e-12 * std::max(1.0, std::fabs(rhs))) {
                throw std::logic_error("split identity violated for model " + m.name);
            }
        }
    }
}

} // namespace

SplitModel model_test_eq() {
    SplitModel m;
    m.name = "test-eq";
    m.step1 = make_sqrt_diffusion_sampler(4.0); // dX1 = 2 sqrt(X1) dW
    m.alpha = [](double x, double) { return 1.0 + x; };
    m.beta = [](double, double) { return 0.0; };
    m.full_drift = [](double x, double) { return 1.0 + x; };
    m.diffusion = [](double x, double) { return 2.0 * std::sqrt(x); };
    m.exact_mean = [](double x0, double t) { return (x0 + 1.0) * std::exp(t) - 1.0; };
    check_split_identity(m);
    return m;
}

SplitModel model_test_eq_bessel() {
    SplitModel m;
    m.name = "test-eq-bessel";
    m.step1 = make_bessel_flow_sampler(); // dX1 = dt + 2 sqrt(X1) dW
    m.alpha = [](double x, double) { return x; };
    m.beta = [](double, double) { return 1.0; };
    m.full_drift = [](double x, double) { return 1.0 + x; };
    m.diffusion = [](double x, double) { return 2.0 * std::sqrt(x); };
    m.exact_mean = [](double x0, double t) { return (x0 + 1.0) * std::exp(t) - 1.0; };
    // No closed pathwise solution: the reference is the scheme itself on the
    // fine grid (flow Step 1 is exact pathwise, Step-2 error is O(dt_fine)).
    m.strong_reference = [](double x0, const std::vector<double>& dw, double dt) {
        double x = x0;
        for (double w : dw) {
            x = bessel_flow_step(x, w);
            x += dt * x;
        }
        return x;
    };
    check_split_identity(m);
    return m;
}

SplitModel model_ginzburg_landau() {
    SplitModel m;
    m.name = "ginzburg-landau";
    m.step1 = make_gbm_sampler(1.0, 1.0); // dX1 = X1 dt + X1 dW
    m.step1.boundary = BoundaryClass::Absorbing;
    {
        // The origin is a fixed point of the full equation; the lognormal
        // map is only defined for x > 0, so pin it explicitly.
        auto base_sample = m.step1.sample;
        auto base_path = m.step1.pathwise;
        m.step1.sample = [base_sample](double x, double t, double dt, RngStream& rng) {
            return x == 0.0 ? 0.0 : base_sample(x, t, dt, rng);
        };
        m.step1.pathwise = [base_path](double x, double t, double dt, double dw) {
            return x == 0.0 ? 0.0 : base_path(x, t, dt, dw);
        };
    }
    m.alpha = [](double x, double) { return -x * x * x; };
    m.default_step2 = OdeMethod::GlNonstandard;
    m.beta = [](double x, double) { return x; };
    m.full_drift = [](double x, double) { return x - x * x * x; };
    m.diffusion = [](double x, double) { return x; };
    // Exact pathwise solution
    //   X(t) = x0 exp(t/2 + W(t)) / sqrt(1 + 2 x0^2 int_0^t exp(s + 2 W(s)) ds)
    // with the integral evaluated by trapezoid quadrature on the fine grid.
    m.strong_reference = [](double x0, const std::vector<double>& dw, double dt) {
        double w = 0.0;
        double integral = 0.0;
        double f_prev = 1.0; // exp(0 + 2*0)
        double s = 0.0;
        for (double step : dw) {
            w += step;
            s += dt;
            const double f = std::exp(s + 2.0 * w);
            integral += 0.5 * dt * (f_prev + f);
            f_prev = f;
        }
        return x0 * std::exp(0.5 * s + w) / std::sqrt(1.0 + 2.0 * x0 * x0 * integral);
    };
    check_split_identity(m);
    return m;
}

SplitModel model_cir(double a, double b, double sigma) {
    if (!(a >= 0.0) || !(sigma > 0.0) || !std::isfinite(b)) {
        throw ParamError("cir: need a >= 0, sigma > 0, finite b");
    }
    SplitModel m;
    m.name = "cir";
    m.params = {{"a", num_str(a)}, {"b", num_str(b)}, {"sigma", num_str(sigma)}};
    m.step1 = make_squared_bessel_sampler({a, sigma});
    m.alpha = [b](double x, double) { return b * x; };
    m.exact_step2 = [b](double x, double, double dt) { return x * std::exp(b * dt); };
    m.beta = [a](double, double) { return a; };
    m.full_drift = [a, b](double x, double) { return a + b * x; };
    m.diffusion = [sigma](double x, double) { return sigma * std::sqrt(x); };
    m.exact_mean = [a, b](double x0, double t) {
        // dm/dt = a + b m
        if (b == 0.0) return x0 + a * t;
        return (x0 + a / b) * std::exp(b * t) - a / b;
    };
    check_split_identity(m);
    return m;
}

SplitModel model_cev(double mu, double sigma, double gamma, bool absorbing) {
    CevParams p{gamma, sigma, absorbing};
    p.validate();
    SplitModel m;
    m.name = "cev";
    m.params = {{"mu", num_str(mu)},
                {"sigma", num_str(sigma)},
                {"gamma", num_str(gamma)},
                {"boundary", absorbing ? "absorbing" : "reflecting"}};
    m.step1 = make_cev_sampler(p);
    m.alpha = [mu](double x, double) { return mu * x; };
    m.exact_step2 = [mu](double x, double, double dt) { return x * std::exp(mu * dt); };
    m.beta = [](double, double) { return 0.0; };
    m.full_drift = [mu](double x, double) { return mu * x; };
    m.diffusion = [sigma, gamma](double x, double) { return sigma * std::pow(x, gamma); };
    if (m.step1.boundary == BoundaryClass::Absorbing) {
        // Driftless absorbing CEV is a true martingale, so the mean is
        // exact even though mass accumulates at zero.
        m.exact_mean = [mu](double x0, double t) { return x0 * std::exp(mu * t); };
    }
    if (gamma > 1.0) {
        m.domain_open = true;
    }
    check_split_identity(m);
    return m;
}

SplitModel model_linear_plus_drift(DriftFn alpha_fn, double lambda, double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(lambda)) {
        throw ParamError("linear-plus-drift: need sigma >= 0, finite lambda");
    }
    SplitModel m;
    m.name = "linear-plus-drift";
    m.params = {{"lambda", num_str(lambda)}, {"sigma", num_str(sigma)}};
    m.step1 = make_gbm_sampler(lambda, sigma);
    m.alpha = alpha_fn;
    m.beta = [lambda](double x, double) { return lambda * x; };
    m.full_drift = [alpha_fn, lambda](double x, double t) { return alpha_fn(x, t) + lambda * x; };
    m.diffusion = [sigma](double x, double) { return sigma * x; };
    m.domain_open = true;
    check_split_identity(m);
    return m;
}

SigmaSplit rewrite_sigma_split(const DriftFn& f, const std::function<double(double)>& sigma,
                               const std::function<double(double)>& sigma_prime) {
    SigmaSplit s;
    s.beta = [sigma, sigma_prime](double x, double) { return 0.5 * sigma(x) * sigma_prime(x); };
    s.alpha = [f, sigma, sigma_prime](double x, double t) {
        return f(x, t) - 0.5 * sigma(x) * sigma_prime(x);
    };
    return s;
}

std::vector<std::string> model_names() {
    return {"test-eq", "test-eq-bessel", "ginzburg-landau", "cir", "cev", "gbm"};
}

SplitModel make_model(const std::string& name, const ParamMap& params) {
    ParamReader r(name, params);
    if (name == "test-eq") {
        r.finish();
        return model_test_eq();
    }
    if (name == "test-eq-bessel") {
        r.finish();
        return model_test_eq_bessel();
    }
    if (name == "ginzburg-landau") {
        r.finish();
        return model_ginzburg_landau();
    }
    if (name == "cir") {
        const double a = r.num("a", 1.0);
        const double b = r.num("b", 1.0);
        const double sigma = r.num("sigma", 1.0);
        r.finish();
        return model_cir(a, b, sigma);
    }
    if (name == "cev") {
        const double mu = r.num("mu", 0.1);
        const double sigma = r.num("sigma", 1.0);
        const double gamma = r.num_required("gamma");
        const bool absorbing_default = gamma >= 0.5 && gamma < 1.0;
        const std::string boundary = r.str("boundary", absorbing_default ? "absorbing"
                                                                         : "reflecting");
        if (boundary != "absorbing" && boundary != "reflecting") {
            throw ParamError("cev: boundary must be 'absorbing' or 'reflecting'");
        }
        r.finish();
        return model_cev(mu, sigma, gamma, boundary == "absorbing");
    }
    if (name == "gbm") {
        const double lambda = r.num("lambda", 1.0);
        const double sigma = r.num("sigma", 1.0);
        r.finish();
        SplitModel m = model_linear_plus_drift([](double, double) { return 0.0; }, lambda, sigma);
        m.name = "gbm";
        m.exact_mean = [lambda](double x0, double t) { return x0 * std::exp(lambda * t); };
        m.strong_reference = [lambda, sigma](double x0, const std::vector<double>& dw,
                                             double dt) {
            double w = 0.0;
            for (double step : dw) w += step;
            const double t = dt * static_cast<double>(dw.size());
            return x0 * std::exp((lambda - 0.5 * sigma * sigma) * t + sigma * w);
        };
        return m;
    }
    std::string names;
    for (const auto& n : model_names()) {
        names += names.empty() ? n : ", " + n;
    }
    throw ParamError("unknown model '" + name + "'; catalog: " + names);
}

} // namespace ssde
