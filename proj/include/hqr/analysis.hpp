#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hqr/boundary.hpp"
#include "hqr/means.hpp"
#include "hqr/series.hpp"

namespace hqr {

enum class FitModel { PowerGrowth, LogPower, Holder, HolderLog };

std::string fit_model_name(FitModel model);

/// Half-open data window, in r for radial fits, in delta for Holder fits.
struct Window {
    double lo = 0.0;
    double hi = 1.0;
};

/// Window r in [1-2^{-j_lo}, 1-2^{-j_hi}].
Window window_from_j(int j_lo, int j_hi);

/// Default fit window: j in {3,...,12} (drops the transient near r = 0).
Window default_growth_window();

struct FitReport {
    FitModel model = FitModel::PowerGrowth;
    double exponent_hat = 0.0;
    double intercept_hat = 0.0;
    double stderr_slope = 0.0;
    double residual_max = 0.0;
    Window window;
    bool constant_signal = false;  // Holder convention: alpha = 1 for constant data
};

struct RatioReport {
    double sup_ratio = 0.0;
    double argmax_r = 0.0;
    std::string left_label;
    std::string right_label;
};

/// OLS slope of log M_p against log(1/(1-r)); exponent_hat estimates the
/// growth order beta.
FitReport fit_growth_exponent(const RadialProfile& profile, Window window);

/// OLS of M_p^p against log(1/(1-r)); exponent_hat is the log-power slope.
FitReport fit_log_power(const RadialProfile& profile, Window window);

/// sup over the common grid of M_p(r,v) / M_p(r,u).
RatioReport riesz_ratio(const RadialProfile& u_profile, const RadialProfile& v_profile);

/// deriv.exponent_hat - base.exponent_hat; requires both fits converged
/// (stderr < 0.05).
double hl_derivative_check(const FitReport& base, const FitReport& deriv);

/// Ratio fp_norm / integral of (1-r)^{p-1} M_p^p(r,h') over [0, r_max]; the
/// singular weight is integrated in closed form per subinterval against
/// piecewise-constant M_p^p. Requires p in (0,1).
double lemma_dk3_functional(const RadialProfile& hprime_profile, double fp_norm);

/// Plain: OLS of log omega against log delta (exponent_hat estimates alpha).
/// log_correction: OLS of omega/delta against log(1/delta); a positive slope
/// certifies a delta*log(1/delta) modulus.
FitReport fit_holder_exponent(const std::vector<std::pair<double, double>>& moduli,
                              bool log_correction);

/// Builds F = schwarz_extension(u), fits the M_inf growth of F'; the
/// predicted exponent is 1 - alpha_claim.
FitReport holder_derivative_check(const BoundarySignal& u, double alpha_claim,
                                  const std::vector<double>& r_grid, Window window);

/// Window-stability rule: the full-window fit plus fits on the two
/// index-halves of the in-window points.
struct StableFit {
    FitReport full;
    FitReport first_half;
    FitReport second_half;

    double spread() const;
    bool stable(double tol) const { return spread() <= 2.0 * tol; }
};

StableFit stable_growth_fit(const RadialProfile& profile, Window window);
StableFit stable_log_power_fit(const RadialProfile& profile, Window window);

std::string to_json(const FitReport& fit);
std::string to_json(const RatioReport& ratio);
std::string to_json(const QrReport& report);

}  // namespace hqr
