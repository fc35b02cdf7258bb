#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hqr/analysis.hpp"
#include "hqr/boundary.hpp"
#include "hqr/catalog.hpp"
#include "hqr/means.hpp"

using namespace hqr;
using std::numbers::pi;

TEST_CASE("make_power_singularity coefficients") {
    const auto g1 = make_power_singularity(1.0, 16);
    for (const auto& c : g1.coeffs) CHECK(c == Complex(1.0, 0.0));

    const auto g2 = make_power_singularity(2.0, 16);
    for (std::size_t n = 0; n < g2.coeffs.size(); ++n)
        CHECK(g2.coeffs[n].real() == doctest::Approx(static_cast<double>(n + 1)));

    // (1-r)^{-1/2} at r = 0.99 with N = 4096: tail below 1e-3 relative
    const auto gh = make_power_singularity(0.5, 4096);
    const double v = eval_series(gh, Complex(0.99, 0.0)).real();
    CHECK(v == doctest::Approx(10.0).epsilon(1e-3));

    CHECK_THROWS_AS(make_power_singularity(0.0, 8), std::domain_error);
}

TEST_CASE("make_constant_dilatation_qr") {
    const auto h = make_power_singularity(1.0, 64);

    const auto f0 = make_constant_dilatation_qr(h, 0.0);
    for (const auto& c : f0.g.coeffs) CHECK(c == Complex(0.0, 0.0));

    const auto f5 = make_constant_dilatation_qr(h, 0.5);
    const auto rep = qr_constants(f5, {0.3, 0.7, 0.9}, 128);
    CHECK(rep.k_hat == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.K_hat == doctest::Approx(3.0).epsilon(1e-12));

    // v = Im f = (1-k) Im h pointwise (h(0) real)
    for (double th : {0.3, 1.1, 4.0}) {
        const Complex z = 0.8 * Complex(std::cos(th), std::sin(th));
        const double v = eval_harmonic(f5, z).imag();
        CHECK(std::abs(v - 0.5 * eval_series(h, z).imag()) < 1e-12);
    }

    CHECK_THROWS_AS(make_constant_dilatation_qr(h, 1.0), NotQuasiregularError);
}

TEST_CASE("qr_constants inverts make_constant_dilatation_qr on k") {
    const auto h = make_cayley(256);
    for (double k : {0.0, 0.25, 0.9}) {
        const auto f = make_constant_dilatation_qr(h, k);
        CHECK(qr_constants(f, {0.5, 0.8}, 64).k_hat == doctest::Approx(k).epsilon(1e-12));
    }
}

TEST_CASE("make_cayley") {
    const auto c = make_cayley(64);
    CHECK(c.coeffs[0] == Complex(1.0, 0.0));
    for (std::size_t n = 1; n < c.coeffs.size(); ++n) CHECK(c.coeffs[n] == Complex(2.0, 0.0));

    // positive harmonic u with u(0) = 1: M_1(r, u) = 1
    const std::size_t N = 32768;
    const auto cay = make_cayley(N);
    const auto prof = radial_profile(series_subject(cay, Part::Re, "u"), 1.0,
                                     dyadic_r_grid(1, 10), default_circle_samples(N));
    for (const auto& [r, m] : prof.entries) CHECK(m == doctest::Approx(1.0).epsilon(1e-10));

    // conjugate part grows like log: positive log-power slope
    const auto qprof = radial_profile(series_subject(cay, Part::Im, "v"), 1.0,
                                      dyadic_r_grid(1, 12), default_circle_samples(N));
    CHECK(fit_log_power(qprof, default_growth_window()).exponent_hat > 0.0);
}

TEST_CASE("make_abs_theta_boundary") {
    const std::size_t M = 4096;
    const auto u = make_abs_theta_boundary(M);
    CHECK(u.values[0] == Complex(0.0, 0.0));
    CHECK(u.values[M / 2] == Complex(pi, 0.0));
    for (std::size_t j = 1; j < M / 2; ++j)
        CHECK(u.values[j] == u.values[M - j]);  // even signal, exact equality

    // Lipschitz with constant 1 on the grid
    for (const auto& [d, w] : modulus_of_continuity(u, {0.01, 0.1, 1.0}))
        CHECK(w == doctest::Approx(d).epsilon(0.02));
}

TEST_CASE("make_holder_boundary") {
    const std::size_t M = 4096;
    const auto a1 = make_holder_boundary(1.0, M);
    const auto at = make_abs_theta_boundary(M);
    for (std::size_t j = 0; j < M; ++j) CHECK(a1.values[j] == at.values[j]);

    const auto a5 = make_holder_boundary(0.5, M);
    CHECK(modulus_of_continuity(a5, {0.04})[0].second == doctest::Approx(0.2).epsilon(0.02));

    const std::size_t M8 = 1u << 14;
    const auto a8 = make_holder_boundary(0.8, M8);
    std::vector<double> deltas;
    for (int l = 3; l <= 13; ++l) deltas.push_back(pi * std::ldexp(1.0, -l));
    std::reverse(deltas.begin(), deltas.end());
    const auto fit = fit_holder_exponent(modulus_of_continuity(a8, deltas), false);
    CHECK(fit.exponent_hat == doctest::Approx(0.8).epsilon(0.025));

    CHECK_THROWS_AS(make_holder_boundary(1.5, M), std::domain_error);
    CHECK_THROWS_AS(make_holder_boundary(0.0, M), std::domain_error);
}

TEST_CASE("catalog series return c_0 at the origin") {
    CHECK(eval_series(make_cayley(32), Complex{0.0}) == Complex(1.0, 0.0));
    CHECK(eval_series(make_power_singularity(0.7, 32), Complex{0.0}) == Complex(1.0, 0.0));
}

TEST_CASE("catalog boundary conjugates have zero mean") {
    for (const auto& sig : {make_abs_theta_boundary(1024), make_holder_boundary(0.4, 1024)}) {
        CHECK(sig.is_real(1e-12));
        const auto v = conjugate_signal(sig);
        Complex mean{0.0};
        for (const auto& x : v.values) mean += x;
        mean /= static_cast<double>(v.size());
        CHECK(std::abs(mean) < 1e-12);
    }
}

TEST_CASE("parse_example_spec") {
    auto s = parse_example_spec("power_singularity:beta=0.5");
    CHECK(s.name == "power_singularity");
    CHECK(s.param("beta") == 0.5);
    CHECK_FALSE(is_map_example(s));
    CHECK_FALSE(is_boundary_example(s));

    s = parse_example_spec("const_dilatation:k=0.5,h=cayley");
    CHECK(is_map_example(s));
    const auto f = build_map(s, 64);
    CHECK(qr_constants(f, {0.5}, 64).K_hat == doctest::Approx(3.0).epsilon(1e-12));

    s = parse_example_spec("const_dilatation:k=0.2,h=power_singularity,beta=1.5");
    CHECK(build_map(s, 64).h.coeffs.size() == 65);

    CHECK(is_boundary_example(parse_example_spec("holder:alpha=0.3")));
    CHECK(is_boundary_example(parse_example_spec("abs_theta")));

    CHECK_THROWS_AS(parse_example_spec("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_example_spec("holder:alpha"), std::invalid_argument);
    CHECK_THROWS_AS(build_map(parse_example_spec("const_dilatation:k=0.5"), 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_analytic(parse_example_spec("abs_theta"), 8), std::invalid_argument);
}

TEST_CASE("catalog_listing names every example") {
    const auto text = catalog_listing();
    for (const char* name :
         {"power_singularity", "const_dilatation", "cayley", "abs_theta", "holder"})
        CHECK(text.find(name) != std::string::npos);
}
