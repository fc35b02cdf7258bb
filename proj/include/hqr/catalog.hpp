#pragma once

#include <map>
#include <string>

#include "hqr/boundary.hpp"
#include "hqr/series.hpp"

namespace hqr {

/// (1-z)^{-beta} via the binomial recursion c_{n+1} = c_n (n+beta)/(n+1).
AnalyticSeries make_power_singularity(double beta, std::size_t N);

/// Constant-dilatation map: g = k (h - h(0)), so omega == k everywhere.
HarmonicMap make_constant_dilatation_qr(const AnalyticSeries& h, double k);

/// F = (1+z)/(1-z): Re F is the Poisson kernel, Im F its conjugate.
AnalyticSeries make_cayley(std::size_t N);

/// Boundary data u(e^{i theta}) = |theta| on (-pi, pi].
BoundarySignal make_abs_theta_boundary(std::size_t M);

/// Boundary data |theta|^alpha on (-pi, pi], 0 < alpha <= 1.
BoundarySignal make_holder_boundary(double alpha, std::size_t M);

/// Parsed `name:key=value,...` experiment address, e.g.
/// power_singularity:beta=0.5 or const_dilatation:k=0.5,h=cayley.
struct ExampleSpec {
    std::string name;
    std::map<std::string, std::string> params;

    double param(const std::string& key) const;
    bool has(const std::string& key) const;
};

ExampleSpec parse_example_spec(const std::string& text);

bool is_boundary_example(const ExampleSpec& spec);
bool is_map_example(const ExampleSpec& spec);

/// Builders used by the CLI; N and M are the truncation degree / sample count.
AnalyticSeries build_analytic(const ExampleSpec& spec, std::size_t N);
HarmonicMap build_map(const ExampleSpec& spec, std::size_t N);
BoundarySignal build_boundary(const ExampleSpec& spec, std::size_t M);

/// One name + parameter schema per line.
std::string catalog_listing();

}  // namespace hqr
