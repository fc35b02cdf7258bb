#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqr {

using Complex = std::complex<double>;

/// Thrown when a dilatation is requested at a point where h' (numerically)
/// vanishes, i.e. the map is not sense-preserving there.
class CriticalPointError : public std::runtime_error {
public:
    explicit CriticalPointError(Complex z);
    Complex where() const { return z_; }

private:
    Complex z_;
};

class NotQuasiregularError : public std::runtime_error {
public:
    explicit NotQuasiregularError(const std::string& what);
};

/// Truncated power series sum_{n=0}^{N} c_n z^n on the unit disk.
/// coeffs[n] is the coefficient of z^n; evaluation only for |z| < 1.
struct AnalyticSeries {
    std::vector<Complex> coeffs;

    AnalyticSeries() : coeffs{Complex{0.0}} {}
    explicit AnalyticSeries(std::vector<Complex> c);

    std::size_t degree() const { return coeffs.size() - 1; }
    Complex at_origin() const { return coeffs.front(); }
};

/// Harmonic map f = h + conj(g) with the normalization g(0) = 0.
struct HarmonicMap {
    AnalyticSeries h;
    AnalyticSeries g;

    HarmonicMap(AnalyticSeries h_, AnalyticSeries g_);
};

/// Measured quasiregularity constants: k_hat = max sampled |omega|,
/// K_hat = (1+k)/(1-k).
struct QrReport {
    double k_hat = 0.0;
    double K_hat = 1.0;
    double r_checked = 0.0;
    double argmax_r = 0.0;
    double argmax_theta = 0.0;
};

Complex eval_series(const AnalyticSeries& s, Complex z);
AnalyticSeries derive_series(const AnalyticSeries& s);
AnalyticSeries add_series(const AnalyticSeries& a, const AnalyticSeries& b);
AnalyticSeries scale_series(const AnalyticSeries& a, Complex factor);

/// Samples of the series at z = r e^{2 pi i j / M}, j = 0..M-1, via FFT of
/// the (wrapped) scaled coefficients. Exact up to roundoff for any M.
std::vector<Complex> eval_on_circle(const AnalyticSeries& s, double r, std::size_t M);

Complex eval_harmonic(const HarmonicMap& f, Complex z);
std::vector<Complex> eval_map_on_circle(const HarmonicMap& f, double r, std::size_t M);

/// Complex dilatation omega = g'/h'. Throws CriticalPointError when
/// |h'(z)| <= 1e-13 * (1 + |g'(z)|).
Complex dilatation(const HarmonicMap& f, Complex z);

/// Scans |omega| over the sampled circles; requires n_theta >= 64 and all
/// radii < 1. Throws NotQuasiregularError if the sampled max reaches 1.
QrReport qr_constants(const HarmonicMap& f, const std::vector<double>& r_grid,
                      std::size_t n_theta);

/// F = h + g, the analytic function with Re F = Re f.
AnalyticSeries analytic_completion(const HarmonicMap& f);

}  // namespace hqr
