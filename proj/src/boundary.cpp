#include "hqr/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hqr/fft.hpp"
#include "hqr/means.hpp"

namespace hqr {

BoundarySignal::BoundarySignal(std::vector<Complex> v) : values(std::move(v)) {
    if (values.size() < 8 || !is_power_of_two(values.size()))
        throw std::invalid_argument("BoundarySignal: M must be a power of two >= 8");
}

BoundarySignal BoundarySignal::from_real(const std::vector<double>& v) {
    std::vector<Complex> c(v.size());
    std::transform(v.begin(), v.end(), c.begin(), [](double x) { return Complex(x, 0.0); });
    return BoundarySignal(std::move(c));
}

double BoundarySignal::theta(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(values.size());
}

bool BoundarySignal::is_real(double tol) const {
    double scale = 0.0, worst = 0.0;
    for (const auto& v : values) {
        scale = std::max(scale, std::abs(v));
        worst = std::max(worst, std::abs(v.imag()));
    }
    return worst <= tol * (1.0 + scale);
}

std::vector<double> BoundarySignal::real_values() const {
    std::vector<double> r(values.size());
    std::transform(values.begin(), values.end(), r.begin(),
                   [](const Complex& v) { return v.real(); });
    return r;
}

Complex FourierCoeffs::coeff(long n) const {
    const long M = static_cast<long>(c.size());
    return c[static_cast<std::size_t>(((n % M) + M) % M)];
}

Complex& FourierCoeffs::coeff(long n) {
    const long M = static_cast<long>(c.size());
    return c[static_cast<std::size_t>(((n % M) + M) % M)];
}

FourierCoeffs fourier_analyze(const BoundarySignal& s) {
    FourierCoeffs fc;
    fc.c = fft_copy(s.values);
    const double scale = 1.0 / static_cast<double>(fc.c.size());
    for (auto& x : fc.c) x *= scale;
    return fc;
}

BoundarySignal fourier_synthesize(const FourierCoeffs& fc) {
    auto v = fft_copy(fc.c, /*inverse=*/true);
    for (auto& x : v) x *= static_cast<double>(v.size());
    return BoundarySignal(std::move(v));
}

AnalyticSeries schwarz_extension(const BoundarySignal& u) {
    if (!u.is_real()) throw std::domain_error("schwarz_extension: input must be real-valued");
    const auto fc = fourier_analyze(u);
    const long half = static_cast<long>(u.size()) / 2;
    std::vector<Complex> F(static_cast<std::size_t>(half));  // degree M/2 - 1
    F[0] = Complex(fc.coeff(0).real(), 0.0);
    for (long n = 1; n < half; ++n) F[static_cast<std::size_t>(n)] = 2.0 * fc.coeff(n);
    return AnalyticSeries(std::move(F));
}

BoundarySignal conjugate_signal(const BoundarySignal& u) {
    if (!u.is_real()) throw std::domain_error("conjugate_signal: input must be real-valued");
    auto fc = fourier_analyze(u);
    const long half = static_cast<long>(u.size()) / 2;
    const Complex mi(0.0, -1.0);
    fc.coeff(0) = Complex{0.0};
    fc.coeff(half) = Complex{0.0};  // Nyquist has no conjugate
    for (long n = 1; n < half; ++n) {
        fc.coeff(n) *= mi;
        fc.coeff(-n) *= -mi;
    }
    return fourier_synthesize(fc);
}

namespace {

// max over circular windows of (max - min), window of w+1 consecutive samples
double oscillation_real(const std::vector<double>& x, std::size_t w) {
    const std::size_t M = x.size();
    std::deque<std::size_t> up, dn;  // indices into the virtual circular extension
    double best = 0.0;
    auto val = [&](std::size_t i) { return x[i % M]; };
    for (std::size_t i = 0; i < M + w; ++i) {
        while (!up.empty() && val(up.back()) <= val(i)) up.pop_back();
        up.push_back(i);
        while (!dn.empty() && val(dn.back()) >= val(i)) dn.pop_back();
        dn.push_back(i);
        if (i >= w) {
            while (up.front() + w < i) up.pop_front();
            while (dn.front() + w < i) dn.pop_front();
            best = std::max(best, val(up.front()) - val(dn.front()));
        }
    }
    return best;
}

double oscillation_complex(const std::vector<Complex>& x, std::size_t w) {
    const std::size_t M = x.size();
    double best = 0.0;
    for (std::size_t g = 1; g <= w; ++g)
        for (std::size_t j = 0; j < M; ++j)
            best = std::max(best, std::abs(x[(j + g) % M] - x[j]));
    return best;
}

}  // namespace

std::vector<std::pair<double, double>> modulus_of_continuity(
    const BoundarySignal& s, const std::vector<double>& deltas) {
    const std::size_t M = s.size();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(M);
    const bool real = s.is_real();
    std::vector<double> rv;
    if (real) rv = s.real_values();

    std::vector<std::pair<double, double>> out;
    out.reserve(deltas.size());
    for (double d : deltas) {
        if (d < step * (1.0 - 1e-12))
            throw std::domain_error("modulus_of_continuity: delta below grid resolution");
        std::size_t gap = static_cast<std::size_t>(std::llround(d / step));
        gap = std::clamp<std::size_t>(gap, 1, M / 2);
        out.emplace_back(d, real ? oscillation_real(rv, gap) : oscillation_complex(s.values, gap));
    }
    return out;
}

double schwarz_derivative_bound(const BoundarySignal& u, double r) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("schwarz_derivative_bound: need 0 <= r < 1");
    const std::size_t M = u.size();
    const auto x = u.real_values();
    std::vector<double> kern(M);
    for (std::size_t i = 0; i < M; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(M);
        kern[i] = 1.0 / (1.0 - 2.0 * r * std::cos(t) + r * r);
    }
    double best = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < M; ++i) acc += std::abs(x[(j + i) % M] - x[j]) * kern[i];
        best = std::max(best, acc);
    }
    return best * 2.0 / static_cast<double>(M);
}

void write_signal_csv(const BoundarySignal& s, std::ostream& out) {
    if (!s.is_real())
        throw std::domain_error("write_signal_csv: only real signals are serialized");
    out << "theta,value\n";
    for (std::size_t j = 0; j < s.size(); ++j)
        out << format_double(s.theta(j)) << "," << format_double(s.values[j].real()) << "\n";
}

BoundarySignal read_signal_csv(std::istream& in) {
    std::vector<double> vals;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("theta,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b))
            throw std::runtime_error("read_signal_csv: malformed line: " + line);
        vals.push_back(std::stod(b));
    }
    return BoundarySignal::from_real(vals);
}

}  // namespace hqr
