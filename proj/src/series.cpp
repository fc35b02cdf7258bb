#include "hqr/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "hqr/fft.hpp"

namespace hqr {

CriticalPointError::CriticalPointError(Complex z)
    : std::runtime_error("h' vanishes at z = (" + std::to_string(z.real()) + ", " +
                         std::to_string(z.imag()) + "); map is not sense-preserving there"),
      z_(z) {}

NotQuasiregularError::NotQuasiregularError(const std::string& what)
    : std::runtime_error(what) {}

AnalyticSeries::AnalyticSeries(std::vector<Complex> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(Complex{0.0});
}

HarmonicMap::HarmonicMap(AnalyticSeries h_, AnalyticSeries g_)
    : h(std::move(h_)), g(std::move(g_)) {
    if (std::abs(g.coeffs.front()) != 0.0)
        throw std::invalid_argument("HarmonicMap: g(0) must be 0");
}

Complex eval_series(const AnalyticSeries& s, Complex z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("eval_series: |z| must be < 1");
    Complex acc{0.0};
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

AnalyticSeries derive_series(const AnalyticSeries& s) {
    if (s.coeffs.size() == 1) return AnalyticSeries({Complex{0.0}});
    std::vector<Complex> d(s.coeffs.size() - 1);
    for (std::size_t n = 0; n + 1 < s.coeffs.size(); ++n)
        d[n] = static_cast<double>(n + 1) * s.coeffs[n + 1];
    return AnalyticSeries(std::move(d));
}

AnalyticSeries add_series(const AnalyticSeries& a, const AnalyticSeries& b) {
    std::vector<Complex> c(std::max(a.coeffs.size(), b.coeffs.size()), Complex{0.0});
    for (std::size_t n = 0; n < a.coeffs.size(); ++n) c[n] += a.coeffs[n];
    for (std::size_t n = 0; n < b.coeffs.size(); ++n) c[n] += b.coeffs[n];
    return AnalyticSeries(std::move(c));
}

AnalyticSeries scale_series(const AnalyticSeries& a, Complex factor) {
    std::vector<Complex> c(a.coeffs);
    for (auto& x : c) x *= factor;
    return AnalyticSeries(std::move(c));
}

std::vector<Complex> eval_on_circle(const AnalyticSeries& s, double r, std::size_t M) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("eval_on_circle: need 0 <= r < 1");
    if (!is_power_of_two(M)) throw std::invalid_argument("eval_on_circle: M must be a power of two");
    // Wrap c_n r^n mod M: exact since e^{2pi i j n/M} depends on n mod M only.
    std::vector<Complex> a(M, Complex{0.0});
    double rn = 1.0;
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
        a[n % M] += s.coeffs[n] * rn;
        rn *= r;
    }
    fft(a, /*inverse=*/true);
    for (auto& x : a) x *= static_cast<double>(M);
    return a;
}

Complex eval_harmonic(const HarmonicMap& f, Complex z) {
    return eval_series(f.h, z) + std::conj(eval_series(f.g, z));
}

std::vector<Complex> eval_map_on_circle(const HarmonicMap& f, double r, std::size_t M) {
    auto hv = eval_on_circle(f.h, r, M);
    auto gv = eval_on_circle(f.g, r, M);
    for (std::size_t j = 0; j < M; ++j) hv[j] += std::conj(gv[j]);
    return hv;
}

Complex dilatation(const HarmonicMap& f, Complex z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("dilatation: |z| must be < 1");
    const Complex hp = eval_series(derive_series(f.h), z);
    const Complex gp = eval_series(derive_series(f.g), z);
    if (std::abs(hp) <= 1e-13 * (1.0 + std::abs(gp))) throw CriticalPointError(z);
    return gp / hp;
}

QrReport qr_constants(const HarmonicMap& f, const std::vector<double>& r_grid,
                      std::size_t n_theta) {
    if (n_theta < 64) throw std::invalid_argument("qr_constants: n_theta must be >= 64");
    for (double r : r_grid)
        if (r < 0.0 || r >= 1.0) throw std::domain_error("qr_constants: radii must lie in [0,1)");
    if (r_grid.empty()) throw std::invalid_argument("qr_constants: empty r_grid");

    const AnalyticSeries hp = derive_series(f.h);
    const AnalyticSeries gp = derive_series(f.g);

    QrReport rep;
    for (double r : r_grid) {
        rep.r_checked = std::max(rep.r_checked, r);
        auto hv = eval_on_circle(hp, r, std::bit_ceil(n_theta));
        auto gv = eval_on_circle(gp, r, std::bit_ceil(n_theta));
        for (std::size_t j = 0; j < hv.size(); ++j) {
            if (std::abs(hv[j]) <= 1e-13 * (1.0 + std::abs(gv[j]))) {
                const double th = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                  static_cast<double>(hv.size());
                throw CriticalPointError(r * Complex(std::cos(th), std::sin(th)));
            }
            const double w = std::abs(gv[j] / hv[j]);
            if (w > rep.k_hat) {
                rep.k_hat = w;
                rep.argmax_r = r;
                rep.argmax_theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(hv.size());
            }
        }
    }
    if (rep.k_hat >= 1.0)
        throw NotQuasiregularError("qr_constants: sampled |omega| reaches " +
                                   std::to_string(rep.k_hat) + " >= 1");
    rep.K_hat = (1.0 + rep.k_hat) / (1.0 - rep.k_hat);
    return rep;
}

AnalyticSeries analytic_completion(const HarmonicMap& f) { return add_series(f.h, f.g); }

}  // namespace hqr
