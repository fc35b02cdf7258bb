#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hqr/catalog.hpp"
#include "hqr/means.hpp"

using namespace hqr;
using std::numbers::pi;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("integral_mean on constant-modulus samples") {
    const double r = 0.37;
    std::vector<Complex> w(128);
    for (std::size_t j = 0; j < w.size(); ++j)
        w[j] = r * std::exp(Complex(0.0, 2.0 * pi * j / w.size()));
    for (double p : {0.5, 1.0, 2.0, kInf})
        CHECK(integral_mean(w, p) == doctest::Approx(r).epsilon(1e-13));
}

TEST_CASE("integral_mean validates input") {
    std::vector<Complex> w(8, Complex(1.0, 0.0));
    CHECK_THROWS_AS(integral_mean(w, 0.0), std::domain_error);
    CHECK_THROWS_AS(integral_mean(w, -1.0), std::domain_error);
    CHECK_THROWS_AS(integral_mean(std::vector<Complex>{}, 1.0), std::invalid_argument);
}

TEST_CASE("M_2 of 1 + z by Parseval") {
    const AnalyticSeries s({{1.0, 0.0}, {1.0, 0.0}});
    for (double r : {0.2, 0.6, 0.95}) {
        const double m2 = integral_mean(eval_on_circle(s, r, 512), 2.0);
        CHECK(m2 == doctest::Approx(std::sqrt(1.0 + r * r)).epsilon(1e-12));
    }
}

TEST_CASE("M_{1/2} of 1 + z at r = 1 against a dense quadrature oracle") {
    // oracle: 10^6-node midpoint quadrature of |1 + e^{i theta}|^{1/2}
    const int K = 1000000;
    double acc = 0.0;
    for (int i = 0; i < K; ++i) {
        const double th = 2.0 * pi * (i + 0.5) / K;
        acc += std::sqrt(std::abs(2.0 * std::cos(th / 2.0)));
    }
    const double oracle = (acc / K) * (acc / K);

    // |1 + e^{i theta}|^{1/2} has a half-order zero at theta = pi, so the
    // trapezoid rule converges like M^{-3/2} rather than spectrally
    const std::size_t M = 65536;
    std::vector<Complex> w(M);
    for (std::size_t j = 0; j < M; ++j)
        w[j] = 1.0 + std::exp(Complex(0.0, 2.0 * pi * j / M));
    CHECK(integral_mean(w, 0.5) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("radial_profile") {
    const AnalyticSeries ident({{0.0, 0.0}, {1.0, 0.0}});
    const auto p1 = radial_profile(series_subject(ident, Part::Full, "z"), 1.0,
                                   {0.1, 0.5, 0.9}, 4096);
    for (const auto& [r, m] : p1.entries) CHECK(m == doctest::Approx(r).epsilon(1e-12));

    // (1-z)^{-1} at p = inf: max at theta = 0 is about 2^j
    const auto geo = make_power_singularity(1.0, 16384);
    const auto pinf = radial_profile(series_subject(geo, Part::Full, "geo"), kInf,
                                     dyadic_r_grid(1, 8), default_circle_samples(16384));
    for (std::size_t i = 0; i < pinf.entries.size(); ++i) {
        const double expected = std::ldexp(1.0, static_cast<int>(i) + 1);
        CHECK(pinf.entries[i].second == doctest::Approx(expected).epsilon(1e-2));
    }

    // mean-value property: M_1 of the positive harmonic Re((1+z)/(1-z)) is 1
    const auto cay = make_cayley(32768);
    const auto pu = radial_profile(series_subject(cay, Part::Re, "u"), 1.0,
                                   dyadic_r_grid(1, 10), default_circle_samples(32768));
    for (const auto& [r, m] : pu.entries) CHECK(m == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(radial_profile(series_subject(ident, Part::Full, "z"), 1.0,
                                   {0.5, 0.2}, 4096),
                    std::invalid_argument);
}

TEST_CASE("hardy_norm_estimate") {
    const AnalyticSeries ident({{0.0, 0.0}, {1.0, 0.0}});
    const auto prof = radial_profile(series_subject(ident, Part::Full, "z"), 1.0,
                                     dyadic_r_grid(1, 10), 4096);
    const auto hn = hardy_norm_estimate(prof);
    CHECK(hn.value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(hn.monotone_tail);

    // (1-z)^{-1} lies in H^{1/2}: sup stable within 1% as r_max goes
    // 1-2^{-10} -> 1-2^{-12}
    const auto geo = make_power_singularity(1.0, 32768);
    const auto subj = series_subject(geo, Part::Full, "geo");
    const std::size_t M = default_circle_samples(32768);
    const double a = hardy_norm_estimate(radial_profile(subj, 0.5, dyadic_r_grid(1, 10), M)).value;
    const double b = hardy_norm_estimate(radial_profile(subj, 0.5, dyadic_r_grid(1, 12), M)).value;
    CHECK(std::isfinite(b));
    CHECK(std::abs(b - a) <= 0.01 * a);
}

TEST_CASE("Parseval identity at p = 2") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<Complex> c(33);
    for (auto& x : c) x = Complex(coef(rng), coef(rng));
    const AnalyticSeries s(c);
    for (double r : {0.3, 0.8, 0.99}) {
        double sum = 0.0, rn = 1.0;
        for (const auto& x : c) {
            sum += std::norm(x) * rn;
            rn *= r * r;
        }
        const double m2 = integral_mean(eval_on_circle(s, r, 128), 2.0);
        CHECK(m2 == doctest::Approx(std::sqrt(sum)).epsilon(1e-10));
    }
}

TEST_CASE("power-mean monotonicity in p") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<Complex> c(17);
    for (auto& x : c) x = Complex(coef(rng), coef(rng));
    const auto w = eval_on_circle(AnalyticSeries(c), 0.9, 512);
    const std::vector<double> ps = {0.25, 0.5, 1.0, 2.0, 4.0, kInf};
    double prev = 0.0;
    for (double p : ps) {
        const double m = integral_mean(w, p);
        CHECK(m >= prev - 1e-12);
        prev = m;
    }
}

TEST_CASE("analytic means nondecreasing in r for p >= 1") {
    const auto geo = make_power_singularity(1.0, 4096);
    for (double p : {1.0, 2.0, kInf}) {
        const auto prof = radial_profile(series_subject(geo, Part::Full, "geo"), p,
                                         dyadic_r_grid(1, 8), default_circle_samples(4096));
        for (std::size_t i = 1; i < prof.entries.size(); ++i)
            CHECK(prof.entries[i].second >= prof.entries[i - 1].second);
    }
}

TEST_CASE("dyadic grid and sample-count helpers") {
    const auto g = dyadic_r_grid(1, 3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.5);
    CHECK(g[2] == 0.875);
    CHECK(default_circle_samples(100) == 4096);
    CHECK(default_circle_samples(4096) == 16384 * 2);  // 4*(N+1) rounded up
}
