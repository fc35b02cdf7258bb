#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "hqr/series.hpp"

namespace hqr {

/// Uniform samples phi_j = phi(e^{i theta_j}), theta_j = 2 pi j / M,
/// M a power of two >= 8.
struct BoundarySignal {
    std::vector<Complex> values;

    explicit BoundarySignal(std::vector<Complex> v);
    static BoundarySignal from_real(const std::vector<double>& v);

    std::size_t size() const { return values.size(); }
    double theta(std::size_t j) const;
    bool is_real(double tol = 1e-9) const;
    std::vector<double> real_values() const;
};

/// Fourier coefficients c_n, n = -M/2+1 .. M/2, stored in FFT order
/// (c[n mod M]).
struct FourierCoeffs {
    std::vector<Complex> c;

    std::size_t size() const { return c.size(); }
    Complex coeff(long n) const;
    Complex& coeff(long n);
};

/// c_n = (1/M) sum_j phi_j e^{-i n theta_j}.
FourierCoeffs fourier_analyze(const BoundarySignal& s);
BoundarySignal fourier_synthesize(const FourierCoeffs& fc);

/// Analytic completion of real boundary data u: F_0 = c_0, F_n = 2 c_n for
/// 1 <= n <= M/2-1 (Nyquist dropped). Re F is the Poisson extension of u and
/// Im F(0) = 0.
AnalyticSeries schwarz_extension(const BoundarySignal& u);

/// Boundary values of the harmonic conjugate v = Im schwarz_extension(u):
/// multiplier -i sgn(n) on the Fourier coefficients, v_hat(0) = 0.
BoundarySignal conjugate_signal(const BoundarySignal& u);

/// omega(delta) = sup |phi(x) - phi(y)| over arc distance <= delta, computed
/// over sample pairs with index gap <= round(delta M / 2 pi). Each delta must
/// be >= 2 pi / M.
std::vector<std::pair<double, double>> modulus_of_continuity(
    const BoundarySignal& s, const std::vector<double>& deltas);

/// Trapezoidal discretization of
/// max_theta (1/pi) int |u(e^{i(theta+t)}) - u(e^{i theta})| / (1 - 2r cos t + r^2) dt,
/// which dominates max_theta |F'(r e^{i theta})|.
double schwarz_derivative_bound(const BoundarySignal& u, double r);

/// CSV with columns theta,value (radians in [0, 2 pi)).
void write_signal_csv(const BoundarySignal& s, std::ostream& out);
BoundarySignal read_signal_csv(std::istream& in);

}  // namespace hqr
