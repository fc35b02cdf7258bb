#include "hqr/means.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hqr {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Part parse_part(const std::string& s) {
    if (s == "re") return Part::Re;
    if (s == "im") return Part::Im;
    if (s == "abs") return Part::Abs;
    if (s == "full") return Part::Full;
    throw std::invalid_argument("unknown part: " + s);
}

std::string part_name(Part part) {
    switch (part) {
        case Part::Re: return "re";
        case Part::Im: return "im";
        case Part::Abs: return "abs";
        default: return "full";
    }
}

namespace {

void apply_part(std::vector<Complex>& w, Part part) {
    switch (part) {
        case Part::Re:
            for (auto& x : w) x = Complex(x.real(), 0.0);
            break;
        case Part::Im:
            for (auto& x : w) x = Complex(x.imag(), 0.0);
            break;
        case Part::Abs:
            for (auto& x : w) x = Complex(std::abs(x), 0.0);
            break;
        case Part::Full:
            break;
    }
}

}  // namespace

CircleSubject series_subject(AnalyticSeries s, Part part, std::string label) {
    return {std::move(label), [s = std::move(s), part](double r, std::size_t M) {
                auto w = eval_on_circle(s, r, M);
                apply_part(w, part);
                return w;
            }};
}

CircleSubject map_subject(HarmonicMap f, Part part, std::string label) {
    return {std::move(label), [f = std::move(f), part](double r, std::size_t M) {
                auto w = eval_map_on_circle(f, r, M);
                apply_part(w, part);
                return w;
            }};
}

double integral_mean(std::span<const Complex> samples, double p) {
    if (samples.empty()) throw std::invalid_argument("integral_mean: empty samples");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& w : samples) m = std::max(m, std::abs(w));
        return m;
    }
    if (!(p > 0.0)) throw std::domain_error("integral_mean: p must be positive");
    double acc = 0.0;
    for (const auto& w : samples) acc += std::pow(std::abs(w), p);
    return std::pow(acc / static_cast<double>(samples.size()), 1.0 / p);
}

RadialProfile radial_profile(const CircleSubject& subject, double p,
                             const std::vector<double>& r_grid, std::size_t M) {
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        if (r_grid[i] < 0.0 || r_grid[i] >= 1.0)
            throw std::domain_error("radial_profile: radii must lie in [0,1)");
        if (i > 0 && r_grid[i] <= r_grid[i - 1])
            throw std::invalid_argument("radial_profile: r_grid must be strictly increasing");
    }
    RadialProfile prof;
    prof.p = p;
    prof.subject = subject.label;
    prof.entries.reserve(r_grid.size());
    for (double r : r_grid) {
        try {
            auto w = subject.sample(r, M);
            prof.entries.emplace_back(r, integral_mean(w, p));
        } catch (const std::exception& e) {
            throw std::runtime_error("radial_profile: evaluation failed at r = " +
                                     format_double(r) + ": " + e.what());
        }
    }
    return prof;
}

HardyNorm hardy_norm_estimate(const RadialProfile& profile) {
    if (profile.entries.empty())
        throw std::invalid_argument("hardy_norm_estimate: empty profile");
    HardyNorm hn;
    double prev = -1.0;
    for (const auto& [r, m] : profile.entries) {
        hn.value = std::max(hn.value, m);
        if (m < prev * (1.0 - 1e-12)) hn.monotone_tail = false;
        prev = m;
    }
    return hn;
}

std::vector<double> dyadic_r_grid(int j_min, int j_max) {
    if (j_min < 0 || j_min > j_max) throw std::invalid_argument("dyadic_r_grid: bad j range");
    std::vector<double> r;
    for (int j = j_min; j <= j_max; ++j) r.push_back(1.0 - std::ldexp(1.0, -j));
    return r;
}

std::size_t default_circle_samples(std::size_t degree) {
    return std::bit_ceil(std::max<std::size_t>(4096, 4 * (degree + 1)));
}

void write_profile_csv(const RadialProfile& profile, std::ostream& out) {
    out << "# p=" << (std::isinf(profile.p) ? std::string("inf") : format_double(profile.p))
        << "\n";
    out << "# subject=" << profile.subject << "\n";
    out << "r,Mp\n";
    for (const auto& [r, m] : profile.entries)
        out << format_double(r) << "," << format_double(m) << "\n";
}

RadialProfile read_profile_csv(std::istream& in) {
    RadialProfile prof;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# p=", 0) == 0) {
            const std::string v = line.substr(4);
            prof.p = (v == "inf") ? std::numeric_limits<double>::infinity() : std::stod(v);
            continue;
        }
        if (line.rfind("# subject=", 0) == 0) {
            prof.subject = line.substr(10);
            continue;
        }
        if (line[0] == '#' || line.rfind("r,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b))
            throw std::runtime_error("read_profile_csv: malformed line: " + line);
        prof.entries.emplace_back(std::stod(a), std::stod(b));
    }
    return prof;
}

}  // namespace hqr
