#include "hqr/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hqr/analysis.hpp"
#include "hqr/boundary.hpp"
#include "hqr/catalog.hpp"
#include "hqr/means.hpp"
#include "hqr/series.hpp"

namespace hqr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) { return format_double(x); }

// Half-window slope agreement used where a criterion asks for "stable"
// slopes; exponents here are O(1) quantities, so the band is absolute.
bool slopes_stable(const StableFit& s, double band) {
    return std::abs(s.first_half.exponent_hat - s.second_half.exponent_hat) <= band;
}

CriterionResult parseval_equivalence(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(8, 64);
    const std::vector<double> radii = {0.5, 0.9, 1.0 - std::ldexp(1.0, -10)};

    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = deg(rng);
        std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
        for (auto& x : c) x = Complex(coef(rng), coef(rng));
        const AnalyticSeries s(c);
        for (double r : radii) {
            const double quad = integral_mean(eval_on_circle(s, r, 256), 2.0);
            double sum = 0.0, rn = 1.0;
            for (const auto& x : c) {
                sum += std::norm(x) * rn;
                rn *= r * r;
            }
            const double exact = std::sqrt(sum);
            worst = std::max(worst, std::abs(quad - exact) / exact);
        }
    }
    return {1, "parseval-equivalence", worst <= 1e-10,
            "max relative error " + fmt(worst) + " (tol 1e-10)"};
}

CriterionResult riesz_p2(unsigned seed) {
    std::mt19937 rng(seed + 1);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(4, 32);
    const auto grid = dyadic_r_grid(1, 12);

    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = deg(rng);
        std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
        for (auto& x : c) x = Complex(coef(rng), coef(rng));
        c[0] = Complex(c[0].real() + 2.0, 0.0);  // Im F(0) = 0, keep u away from 0
        const AnalyticSeries F(c);
        const auto up = radial_profile(series_subject(F, Part::Re, "u"), 2.0, grid, 256);
        const auto vp = radial_profile(series_subject(F, Part::Im, "v"), 2.0, grid, 256);
        worst = std::max(worst, riesz_ratio(up, vp).sup_ratio);
    }
    return {2, "riesz-ratio-p2", worst <= 1.0 + 1e-10,
            "max sup_ratio " + fmt(worst) + " (bound 1 + 1e-10)"};
}

CriterionResult growth_transfer() {
    // deep grid and window: subleading terms in the means decay like a power of
    // (1-r) relative to the lead, and the two slopes approach each other slowly
    const auto grid = dyadic_r_grid(1, 14);
    const Window win = window_from_j(4, 14);
    const std::size_t N = 262144;
    const std::size_t M = default_circle_samples(N);
    bool pass = true;
    int in_scope_count = 0;
    double worst_gap = 0.0;
    std::ostringstream bad;
    for (double beta : {0.5, 1.0, 1.5}) {
        const auto h = make_power_singularity(beta, N);
        // f = h + k conj(h - 1): u = (1+k) Re h - k and v = (1-k) Im h, so one
        // circle evaluation of h per radius serves all k
        std::vector<std::vector<Complex>> circles;
        for (double r : grid) circles.push_back(eval_on_circle(h, r, M));
        for (double k : {0.2, 0.5, 0.8}) {
            for (double p : {0.5, 1.0, 2.0, kInf}) {
                RadialProfile up, vp;
                up.p = vp.p = p;
                std::vector<Complex> us(M), vs(M);
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    for (std::size_t j = 0; j < M; ++j) {
                        us[j] = Complex((1.0 + k) * circles[i][j].real() - k, 0.0);
                        vs[j] = Complex((1.0 - k) * circles[i][j].imag(), 0.0);
                    }
                    up.entries.emplace_back(grid[i], integral_mean(us, p));
                    vp.entries.emplace_back(grid[i], integral_mean(vs, p));
                }
                const auto fu = stable_growth_fit(up, win);
                const auto fv = stable_growth_fit(vp, win);
                const double gap = std::abs(fv.full.exponent_hat - fu.full.exponent_hat);
                // the transfer claim is gated on fitted beta_u in [0.3, 2];
                // outside that band M_p(r, u) is bounded or log-degenerate and
                // a power-law slope comparison is vacuous
                const bool in_scope =
                    fu.full.exponent_hat >= 0.3 && fu.full.exponent_hat <= 2.0;
                if (!in_scope) continue;
                ++in_scope_count;
                worst_gap = std::max(worst_gap, gap);
                const bool ok = gap <= 0.05 && fu.stable(0.05) && fv.stable(0.05);
                if (!ok) {
                    pass = false;
                    bad << " [k=" << k << " beta=" << beta << " p=" << p << " gap=" << fmt(gap)
                        << " spread_u=" << fmt(fu.spread()) << " spread_v=" << fmt(fv.spread())
                        << "]";
                }
            }
        }
    }
    return {3, "growth-transfer", pass,
            std::to_string(in_scope_count) + "/36 cases in scope (fitted beta_u in [0.3, 2]), "
            "max |beta_v - beta_u| = " + fmt(worst_gap) + " (tol 0.05, half-window spread "
            "<= 0.1)" + bad.str()};
}

CriterionResult derivative_gap() {
    const auto grid = dyadic_r_grid(1, 12);
    const Window win = default_growth_window();
    const std::size_t N = 16384;
    bool pass = true;
    std::ostringstream detail;
    for (double beta : {0.5, 1.0}) {
        const auto F = make_power_singularity(beta, N);
        const auto Fp = derive_series(F);
        const std::size_t M = default_circle_samples(N);
        for (double p : {2.0, kInf}) {
            const auto base = fit_growth_exponent(
                radial_profile(series_subject(F, Part::Full, "F"), p, grid, M), win);
            const auto deriv = fit_growth_exponent(
                radial_profile(series_subject(Fp, Part::Full, "F'"), p, grid, M), win);
            const double gap = hl_derivative_check(base, deriv);
            const bool ok = std::abs(gap - 1.0) <= 0.1;
            pass = pass && ok;
            detail << " [beta=" << beta << " p=" << p << " gap=" << fmt(gap) << "]";
        }
    }
    return {4, "derivative-exponent-gap", pass, "target 1.0 +/- 0.1:" + detail.str()};
}

CriterionResult log_power_bound() {
    const auto grid = dyadic_r_grid(1, 12);
    const Window win = default_growth_window();
    const std::size_t N = 65536;
    const auto cayley = make_cayley(N);
    const std::size_t M = default_circle_samples(N);
    const auto qr = make_constant_dilatation_qr(cayley, 0.5);

    struct Case {
        RadialProfile profile;
        std::string tag;
    };
    std::vector<Case> cases;
    cases.push_back({radial_profile(series_subject(cayley, Part::Im, "Im cayley"), 1.0, grid, M),
                     "cayley p=1"});
    for (double p : {0.5, 1.0})
        cases.push_back({radial_profile(map_subject(qr, Part::Im, "v"), p, grid, M),
                         "qr(k=0.5) p=" + fmt(p)});

    bool pass = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const auto fit = stable_log_power_fit(c.profile, win);
        const bool positive = fit.full.exponent_hat > 0.0 &&
                              fit.first_half.exponent_hat > 0.0 &&
                              fit.second_half.exponent_hat > 0.0;
        const bool stable = slopes_stable(fit, 0.10);
        // boundedness: M_p^p / log(1/(1-r)) must not double from j=8 to j=12
        auto ratio_at = [&](int j) {
            const double r = 1.0 - std::ldexp(1.0, -j);
            for (const auto& [rr, m] : c.profile.entries)
                if (std::abs(rr - r) < 1e-12)
                    return std::pow(m, c.profile.p) / std::log(1.0 / (1.0 - rr));
            throw std::logic_error("grid point missing");
        };
        const bool bounded = ratio_at(12) <= 2.0 * ratio_at(8);
        const bool ok = positive && stable && bounded;
        pass = pass && ok;
        detail << " [" << c.tag << " slope=" << fmt(fit.full.exponent_hat)
               << " halves=" << fmt(fit.first_half.exponent_hat) << "/"
               << fmt(fit.second_half.exponent_hat) << " ratio8=" << fmt(ratio_at(8))
               << " ratio12=" << fmt(ratio_at(12)) << (ok ? "" : " FAIL") << "]";
    }
    return {5, "log-power-bound", pass, detail.str()};
}

// geometric-in-(1-r) grid from 0 to r_max, n+1 points
std::vector<double> dense_grid(double r_max, int n) {
    std::vector<double> grid;
    for (int i = 0; i <= n; ++i)
        grid.push_back(1.0 - std::pow(1.0 - r_max, static_cast<double>(i) / n));
    return grid;
}

double lemma_ratio(const AnalyticSeries& h_shifted, double k, double r_max) {
    const auto grid = dense_grid(r_max, 512);
    const std::size_t M = default_circle_samples(h_shifted.degree());
    const double p = 0.5;
    const auto f = make_constant_dilatation_qr(h_shifted, k);
    const auto fp_profile = radial_profile(map_subject(f, Part::Abs, "|f|"), p, grid, M);
    const double fp_norm = std::pow(hardy_norm_estimate(fp_profile).value, p);
    const auto hp = derive_series(h_shifted);
    const auto hp_profile =
        radial_profile(series_subject(hp, Part::Full, "h'"), p, grid, M);
    return lemma_dk3_functional(hp_profile, fp_norm);
}

CriterionResult lemma_uniformity() {
    const double r_max = 1.0 - std::ldexp(1.0, -12);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t m : {1u, 2u, 4u, 8u, 16u}) {
        std::vector<Complex> c(m + 1, Complex{0.0});
        c[m] = Complex(1.0, 0.0);
        const double ratio = lemma_ratio(AnalyticSeries(c), 0.0, r_max);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    const bool band_ok = hi <= 3.0 * lo;

    // QR map over the shifted singularity (f(0) = 0)
    auto h = make_power_singularity(0.5, 16384);
    h.coeffs[0] = Complex{0.0};
    const double r_a = lemma_ratio(h, 0.5, 1.0 - std::ldexp(1.0, -10));
    const double r_b = lemma_ratio(h, 0.5, r_max);
    const bool stable_ok = std::isfinite(r_b) && std::abs(r_b - r_a) <= 0.10 * std::abs(r_a);

    return {6, "lemma-functional-uniformity", band_ok && stable_ok,
            "monomial ratios in [" + fmt(lo) + ", " + fmt(hi) + "] (factor-3 band), qr ratio " +
                fmt(r_a) + " -> " + fmt(r_b) + " (10% stability)"};
}

CriterionResult holder_transfer() {
    // deep windows: the alpha = 0.8 case carries strong subleading corrections
    // (the conjugate approaches the log-corrected Lipschitz borderline), so the
    // fitted slopes converge slowly in both delta and r
    const std::size_t M = 1u << 18;
    const auto grid = dyadic_r_grid(1, 13);
    const Window win = window_from_j(5, 13);
    std::vector<double> deltas;
    for (int l = 5; l <= 16; ++l) deltas.push_back(std::numbers::pi * std::ldexp(1.0, -l));
    std::reverse(deltas.begin(), deltas.end());

    bool pass = true;
    std::ostringstream detail;
    for (double alpha : {0.3, 0.5, 0.8}) {
        const auto u = make_holder_boundary(alpha, M);
        // v boundary of const_dilatation(k=0.5) over schwarz_extension(u):
        // Im f = (1-k) Im F on the circle.
        auto v = conjugate_signal(u);
        for (auto& x : v.values) x *= 0.5;
        const auto fit_v = fit_holder_exponent(modulus_of_continuity(v, deltas), false);
        const auto fit_d = holder_derivative_check(u, alpha, grid, win);
        const bool ok = std::abs(fit_v.exponent_hat - alpha) <= 0.07 &&
                        std::abs(fit_d.exponent_hat - (1.0 - alpha)) <= 0.07;
        pass = pass && ok;
        detail << " [alpha=" << alpha << " alpha_v=" << fmt(fit_v.exponent_hat)
               << " deriv_exp=" << fmt(fit_d.exponent_hat) << (ok ? "" : " FAIL") << "]";
    }
    return {7, "holder-transfer", pass, "tol 0.07:" + detail.str()};
}

CriterionResult non_lipschitz_conjugate() {
    const std::size_t M = 1u << 16;
    const auto u = make_abs_theta_boundary(M);
    const auto v = conjugate_signal(u);

    std::vector<double> deltas;
    for (int l = 0; l <= 10; ++l) deltas.push_back(0.001 * std::pow(100.0, l / 10.0));
    const auto mv = modulus_of_continuity(v, deltas);
    const double slope_small = mv.front().second / mv.front().first;
    const double slope_large = mv.back().second / mv.back().first;
    const bool doubling = slope_small >= 2.0 * slope_large;

    const auto log_fit = fit_holder_exponent(mv, true);
    const bool log_ok = log_fit.exponent_hat > 0.0;

    const auto mu = modulus_of_continuity(u, deltas);
    const auto u_fit = fit_holder_exponent(mu, false);
    const bool u_ok = std::abs(u_fit.exponent_hat - 1.0) <= 0.02;

    return {8, "non-lipschitz-conjugate", doubling && log_ok && u_ok,
            "omega/delta " + fmt(slope_large) + " @0.1 vs " + fmt(slope_small) +
                " @0.001, log slope " + fmt(log_fit.exponent_hat) + ", alpha_u " +
                fmt(u_fit.exponent_hat)};
}

CriterionResult schwarz_domination() {
    const std::size_t M = 4096;
    bool pass = true;
    double worst = 0.0;
    for (double alpha : {1.0, 0.5}) {
        const auto u = make_holder_boundary(alpha, M);
        const auto Fp = derive_series(schwarz_extension(u));
        for (int j = 2; j <= 8; ++j) {
            const double r = 1.0 - std::ldexp(1.0, -j);
            const double max_fp = integral_mean(eval_on_circle(Fp, r, 8192), kInf);
            const double bound = schwarz_derivative_bound(u, r);
            worst = std::max(worst, max_fp / bound);
            if (max_fp > bound * (1.0 + 1e-6)) pass = false;
        }
    }
    return {9, "schwarz-derivative-domination", pass,
            "max |F'|/bound = " + fmt(worst) + " (must be <= 1 + 1e-6)"};
}

CriterionResult derivative_sandwich() {
    const auto grid = dyadic_r_grid(1, 12);
    const std::size_t N = 4096;
    bool pass = true;
    double worst_g = 0.0, worst_f = 0.0;
    std::vector<AnalyticSeries> bases;
    for (double beta : {0.5, 1.0, 1.5}) bases.push_back(make_power_singularity(beta, N));
    bases.push_back(make_cayley(N));
    for (const auto& h : bases) {
        const std::size_t M = default_circle_samples(N);
        for (double k : {0.2, 0.5, 0.8}) {
            const auto f = make_constant_dilatation_qr(h, k);
            const auto hp = derive_series(f.h);
            const auto gp = derive_series(f.g);
            const auto Fp = derive_series(analytic_completion(f));
            for (double p : {0.5, 1.0, 2.0, kInf}) {
                const auto hp_prof =
                    radial_profile(series_subject(hp, Part::Full, "h'"), p, grid, M);
                const auto gp_prof =
                    radial_profile(series_subject(gp, Part::Full, "g'"), p, grid, M);
                const auto Fp_prof =
                    radial_profile(series_subject(Fp, Part::Full, "F'"), p, grid, M);
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const double mh = hp_prof.entries[i].second;
                    const double mg = gp_prof.entries[i].second;
                    const double mF = Fp_prof.entries[i].second;
                    worst_g = std::max(worst_g, mg / (k * mh));
                    worst_f = std::max(worst_f, (1.0 - k) * mh / mF);
                    if (mg > k * mh * (1.0 + 1e-10)) pass = false;
                    if ((1.0 - k) * mh > mF * (1.0 + 1e-10)) pass = false;
                }
            }
        }
    }
    return {10, "derivative-sandwich", pass,
            "max Mp(g')/(k Mp(h')) = " + fmt(worst_g) + ", max (1-k)Mp(h')/Mp(F') = " +
                fmt(worst_f) + " (bounds 1 + 1e-10)"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned seed) {
    std::vector<CriterionResult> results;
    results.push_back(parseval_equivalence(seed));
    results.push_back(riesz_p2(seed));
    results.push_back(growth_transfer());
    results.push_back(derivative_gap());
    results.push_back(log_power_bound());
    results.push_back(lemma_uniformity());
    results.push_back(holder_transfer());
    results.push_back(non_lipschitz_conjugate());
    results.push_back(schwarz_domination());
    results.push_back(derivative_sandwich());
    return results;
}

}  // namespace hqr
