#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hqr/series.hpp"

namespace hqr {

/// (r, M_p(r)) pairs for fixed p, r strictly increasing in [0, 1).
struct RadialProfile {
    double p = 2.0;  // exponent; std::numeric_limits<double>::infinity() for sup
    std::string subject;
    std::vector<std::pair<double, double>> entries;
};

enum class Part { Re, Im, Abs, Full };

Part parse_part(const std::string& s);
std::string part_name(Part part);

/// A function sampled on circles |z| = r with M uniform points,
/// theta_j = 2 pi j / M.
struct CircleSubject {
    std::string label;
    std::function<std::vector<Complex>(double r, std::size_t M)> sample;
};

CircleSubject series_subject(AnalyticSeries s, Part part, std::string label);
CircleSubject map_subject(HarmonicMap f, Part part, std::string label);

/// p-th power mean of |w_j| over the samples (uniform-grid trapezoidal rule);
/// p = inf takes the max. Requires p > 0 and nonempty samples.
double integral_mean(std::span<const Complex> samples, double p);

RadialProfile radial_profile(const CircleSubject& subject, double p,
                             const std::vector<double>& r_grid, std::size_t M);

struct HardyNorm {
    double value = 0.0;       // sup over profile entries
    bool monotone_tail = true;  // false when the means dip along the grid
};

HardyNorm hardy_norm_estimate(const RadialProfile& profile);

/// r_j = 1 - 2^{-j}, j = j_min..j_max.
std::vector<double> dyadic_r_grid(int j_min, int j_max);

/// Default circle sample count: max(4096, 4N) rounded up to a power of two.
std::size_t default_circle_samples(std::size_t degree);

void write_profile_csv(const RadialProfile& profile, std::ostream& out);
RadialProfile read_profile_csv(std::istream& in);

/// %.17g rendering used by every CSV/JSON writer.
std::string format_double(double x);

}  // namespace hqr
