#include "hqr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hqr {

std::string fit_model_name(FitModel model) {
    switch (model) {
        case FitModel::PowerGrowth: return "power_growth";
        case FitModel::LogPower: return "log_power";
        case FitModel::Holder: return "holder";
        default: return "holder_log";
    }
}

Window window_from_j(int j_lo, int j_hi) {
    return {1.0 - std::ldexp(1.0, -j_lo), 1.0 - std::ldexp(1.0, -j_hi)};
}

Window default_growth_window() { return window_from_j(3, 12); }

namespace {

struct OlsResult {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double residual_max = 0.0;
};

OlsResult ols(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("ols: need at least 2 points");
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols: degenerate abscissas");
    OlsResult r;
    r.slope = sxy / sxx;
    r.intercept = ym - r.slope * xm;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (r.intercept + r.slope * x[i]);
        sse += e * e;
        r.residual_max = std::max(r.residual_max, std::abs(e));
    }
    r.stderr_slope = (n > 2) ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
    return r;
}

std::vector<std::pair<double, double>> in_window(const RadialProfile& profile, Window w) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& e : profile.entries)
        if (e.first >= w.lo - 1e-12 && e.first <= w.hi + 1e-12) pts.push_back(e);
    return pts;
}

FitReport radial_fit(const RadialProfile& profile, Window window, FitModel model) {
    const auto pts = in_window(profile, window);
    if (pts.size() < 4) throw std::invalid_argument("fit: fewer than 4 points in window");
    std::vector<double> x, y;
    for (const auto& [r, m] : pts) {
        x.push_back(std::log(1.0 / (1.0 - r)));
        if (model == FitModel::PowerGrowth) {
            if (!(m > 0.0)) throw std::invalid_argument("fit: nonpositive mean in window");
            y.push_back(std::log(m));
        } else {
            y.push_back(std::pow(m, profile.p));
        }
    }
    const OlsResult o = ols(x, y);
    FitReport fit;
    fit.model = model;
    fit.exponent_hat = o.slope;
    fit.intercept_hat = o.intercept;
    fit.stderr_slope = o.stderr_slope;
    fit.residual_max = o.residual_max;
    fit.window = {pts.front().first, pts.back().first};
    return fit;
}

}  // namespace

FitReport fit_growth_exponent(const RadialProfile& profile, Window window) {
    return radial_fit(profile, window, FitModel::PowerGrowth);
}

FitReport fit_log_power(const RadialProfile& profile, Window window) {
    if (std::isinf(profile.p))
        throw std::domain_error("fit_log_power: p must be finite");
    return radial_fit(profile, window, FitModel::LogPower);
}

RatioReport riesz_ratio(const RadialProfile& u_profile, const RadialProfile& v_profile) {
    if (u_profile.p != v_profile.p)
        throw std::invalid_argument("riesz_ratio: exponent mismatch");
    if (u_profile.entries.size() != v_profile.entries.size())
        throw std::invalid_argument("riesz_ratio: grid mismatch");
    RatioReport rep;
    rep.left_label = v_profile.subject;
    rep.right_label = u_profile.subject;
    for (std::size_t i = 0; i < u_profile.entries.size(); ++i) {
        const auto& [ru, mu] = u_profile.entries[i];
        const auto& [rv, mv] = v_profile.entries[i];
        if (std::abs(ru - rv) > 1e-12)
            throw std::invalid_argument("riesz_ratio: grid mismatch");
        if (!(mu > 0.0)) throw std::domain_error("riesz_ratio: vanishing denominator mean");
        const double q = mv / mu;
        if (q > rep.sup_ratio) {
            rep.sup_ratio = q;
            rep.argmax_r = ru;
        }
    }
    return rep;
}

double hl_derivative_check(const FitReport& base, const FitReport& deriv) {
    if (base.stderr_slope >= 0.05 || deriv.stderr_slope >= 0.05)
        throw std::runtime_error("hl_derivative_check: unconverged fit (stderr >= 0.05)");
    return deriv.exponent_hat - base.exponent_hat;
}

double lemma_dk3_functional(const RadialProfile& hprime_profile, double fp_norm) {
    const double p = hprime_profile.p;
    if (!(p > 0.0) || p >= 1.0)
        throw std::domain_error("lemma_dk3_functional: need p in (0,1)");
    const auto& e = hprime_profile.entries;
    if (e.size() < 2 || e.front().first > 1e-9)
        throw std::invalid_argument("lemma_dk3_functional: profile must start at r = 0");
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        const double mp = 0.5 * (std::pow(e[i].second, p) + std::pow(e[i + 1].second, p));
        // exact integral of (1-r)^{p-1} over [r_i, r_{i+1}]
        const double wgt =
            (std::pow(1.0 - e[i].first, p) - std::pow(1.0 - e[i + 1].first, p)) / p;
        integral += mp * wgt;
    }
    if (!(integral > 0.0))
        throw std::runtime_error("lemma_dk3_functional: vanishing weight integral");
    return fp_norm / integral;
}

FitReport fit_holder_exponent(const std::vector<std::pair<double, double>>& moduli,
                              bool log_correction) {
    if (moduli.size() < 4)
        throw std::invalid_argument("fit_holder_exponent: need at least 4 gaps");
    double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0, wmax = 0.0;
    for (const auto& [d, w] : moduli) {
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
        wmax = std::max(wmax, w);
    }
    if (dmax < 100.0 * dmin * (1.0 - 1e-9))
        throw std::invalid_argument("fit_holder_exponent: gaps must span >= 2 decades");
    if (wmax == 0.0) {
        if (log_correction)
            throw std::domain_error("fit_holder_exponent: constant signal has no log modulus");
        FitReport fit;
        fit.model = FitModel::Holder;
        fit.exponent_hat = 1.0;
        fit.constant_signal = true;
        fit.window = {dmin, dmax};
        return fit;
    }
    std::vector<double> x, y;
    for (const auto& [d, w] : moduli) {
        if (!(w > 0.0))
            throw std::domain_error("fit_holder_exponent: nonpositive modulus value");
        if (log_correction) {
            x.push_back(std::log(1.0 / d));
            y.push_back(w / d);
        } else {
            x.push_back(std::log(d));
            y.push_back(std::log(w));
        }
    }
    const OlsResult o = ols(x, y);
    FitReport fit;
    fit.model = log_correction ? FitModel::HolderLog : FitModel::Holder;
    fit.exponent_hat = o.slope;
    fit.intercept_hat = o.intercept;
    fit.stderr_slope = o.stderr_slope;
    fit.residual_max = o.residual_max;
    fit.window = {dmin, dmax};
    return fit;
}

FitReport holder_derivative_check(const BoundarySignal& u, double alpha_claim,
                                  const std::vector<double>& r_grid, Window window) {
    if (!(alpha_claim > 0.0) || alpha_claim >= 1.0)
        throw std::domain_error("holder_derivative_check: need alpha in (0,1)");
    const AnalyticSeries fprime = derive_series(schwarz_extension(u));
    const auto subject = series_subject(fprime, Part::Full, "F'");
    const auto profile =
        radial_profile(subject, std::numeric_limits<double>::infinity(), r_grid,
                       default_circle_samples(fprime.degree()));
    return fit_growth_exponent(profile, window);
}

double StableFit::spread() const {
    return std::abs(first_half.exponent_hat - second_half.exponent_hat);
}

namespace {

StableFit stable_fit(const RadialProfile& profile, Window window, bool log_power) {
    const auto pts = in_window(profile, window);
    if (pts.size() < 8)
        throw std::invalid_argument("stable fit: need >= 8 points in window");
    const std::size_t mid = pts.size() / 2;
    const Window lo{pts.front().first, pts[mid - 1].first};
    const Window hi{pts[mid].first, pts.back().first};
    StableFit s;
    if (log_power) {
        s.full = fit_log_power(profile, window);
        s.first_half = fit_log_power(profile, lo);
        s.second_half = fit_log_power(profile, hi);
    } else {
        s.full = fit_growth_exponent(profile, window);
        s.first_half = fit_growth_exponent(profile, lo);
        s.second_half = fit_growth_exponent(profile, hi);
    }
    return s;
}

}  // namespace

StableFit stable_growth_fit(const RadialProfile& profile, Window window) {
    return stable_fit(profile, window, false);
}

StableFit stable_log_power_fit(const RadialProfile& profile, Window window) {
    return stable_fit(profile, window, true);
}

std::string to_json(const FitReport& fit) {
    nlohmann::ordered_json j;
    j["model"] = fit_model_name(fit.model);
    j["exponent_hat"] = fit.exponent_hat;
    j["intercept_hat"] = fit.intercept_hat;
    j["stderr"] = fit.stderr_slope;
    j["window_lo"] = fit.window.lo;
    j["window_hi"] = fit.window.hi;
    j["residual_max"] = fit.residual_max;
    if (fit.constant_signal) j["constant_signal"] = true;
    return j.dump(2) + "\n";
}

std::string to_json(const RatioReport& ratio) {
    nlohmann::ordered_json j;
    j["sup_ratio"] = ratio.sup_ratio;
    j["argmax_r"] = ratio.argmax_r;
    j["left_label"] = ratio.left_label;
    j["right_label"] = ratio.right_label;
    return j.dump(2) + "\n";
}

std::string to_json(const QrReport& report) {
    nlohmann::ordered_json j;
    j["k_hat"] = report.k_hat;
    j["K_hat"] = report.K_hat;
    j["r_checked"] = report.r_checked;
    j["argmax_r"] = report.argmax_r;
    j["argmax_theta"] = report.argmax_theta;
    return j.dump(2) + "\n";
}

}  // namespace hqr
