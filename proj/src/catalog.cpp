#include "hqr/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hqr {

AnalyticSeries make_power_singularity(double beta, std::size_t N) {
    if (!(beta > 0.0)) throw std::domain_error("make_power_singularity: beta must be > 0");
    std::vector<Complex> c(N + 1);
    double cn = 1.0;
    for (std::size_t n = 0; n <= N; ++n) {
        c[n] = Complex(cn, 0.0);
        cn *= (static_cast<double>(n) + beta) / static_cast<double>(n + 1);
    }
    return AnalyticSeries(std::move(c));
}

HarmonicMap make_constant_dilatation_qr(const AnalyticSeries& h, double k) {
    if (k < 0.0 || k >= 1.0)
        throw NotQuasiregularError("make_constant_dilatation_qr: need 0 <= k < 1");
    AnalyticSeries g = scale_series(h, Complex(k, 0.0));
    g.coeffs[0] = Complex{0.0};  // g = k (h - h(0))
    return HarmonicMap(h, std::move(g));
}

AnalyticSeries make_cayley(std::size_t N) {
    std::vector<Complex> c(N + 1, Complex(2.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    return AnalyticSeries(std::move(c));
}

namespace {

BoundarySignal sampled_abs_theta_power(double alpha, std::size_t M) {
    std::vector<double> v(M);
    for (std::size_t j = 0; j < M; ++j) {
        // mirror the index so the evenness value(theta_j) = value(2pi - theta_j)
        // holds exactly
        const std::size_t jj = std::min(j, M - j);
        const double th =
            2.0 * std::numbers::pi * static_cast<double>(jj) / static_cast<double>(M);
        v[j] = std::pow(th, alpha);
    }
    return BoundarySignal::from_real(v);
}

}  // namespace

BoundarySignal make_abs_theta_boundary(std::size_t M) {
    return sampled_abs_theta_power(1.0, M);
}

BoundarySignal make_holder_boundary(double alpha, std::size_t M) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("make_holder_boundary: need 0 < alpha <= 1");
    return sampled_abs_theta_power(alpha, M);
}

double ExampleSpec::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("example " + name + ": missing parameter " + key);
    return std::stod(it->second);
}

bool ExampleSpec::has(const std::string& key) const { return params.count(key) > 0; }

ExampleSpec parse_example_spec(const std::string& text) {
    ExampleSpec spec;
    const auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string kv;
        while (std::getline(rest, kv, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad parameter (want key=value): " + kv);
            spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
    }
    if (spec.name != "power_singularity" && spec.name != "const_dilatation" &&
        spec.name != "cayley" && spec.name != "abs_theta" && spec.name != "holder")
        throw std::invalid_argument("unknown catalog name: " + spec.name);
    return spec;
}

bool is_boundary_example(const ExampleSpec& spec) {
    return spec.name == "abs_theta" || spec.name == "holder";
}

bool is_map_example(const ExampleSpec& spec) { return spec.name == "const_dilatation"; }

AnalyticSeries build_analytic(const ExampleSpec& spec, std::size_t N) {
    if (spec.name == "power_singularity") return make_power_singularity(spec.param("beta"), N);
    if (spec.name == "cayley") return make_cayley(N);
    throw std::invalid_argument("not an analytic catalog example: " + spec.name);
}

HarmonicMap build_map(const ExampleSpec& spec, std::size_t N) {
    if (spec.name != "const_dilatation")
        throw std::invalid_argument("not a harmonic-map catalog example: " + spec.name);
    auto it = spec.params.find("h");
    if (it == spec.params.end())
        throw std::invalid_argument("const_dilatation: missing parameter h");
    ExampleSpec base;
    base.name = it->second;
    base.params = spec.params;  // shared flat syntax: beta rides alongside k and h
    base.params.erase("h");
    if (base.name != "power_singularity" && base.name != "cayley")
        throw std::invalid_argument("const_dilatation: h must be power_singularity or cayley");
    return make_constant_dilatation_qr(build_analytic(base, N), spec.param("k"));
}

BoundarySignal build_boundary(const ExampleSpec& spec, std::size_t M) {
    if (spec.name == "abs_theta") return make_abs_theta_boundary(M);
    if (spec.name == "holder") return make_holder_boundary(spec.param("alpha"), M);
    throw std::invalid_argument("not a boundary catalog example: " + spec.name);
}

std::string catalog_listing() {
    return "power_singularity:beta=<x>      analytic (1-z)^(-beta), beta > 0\n"
           "const_dilatation:k=<x>,h=<name> harmonic map h + k*conj(h - h(0)); h in\n"
           "                                {cayley, power_singularity} (pass beta=<x> for the latter)\n"
           "cayley                          analytic (1+z)/(1-z)\n"
           "abs_theta                       boundary |theta| on (-pi, pi]\n"
           "holder:alpha=<x>                boundary |theta|^alpha, 0 < alpha <= 1\n";
}

}  // namespace hqr
