#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "onebit/arcsine.hpp"
#include "onebit/special.hpp"
#include "oracles.hpp"

using namespace onebit;
using special::kPi;

TEST_CASE("alpha_beta") {
    for (double theta = 0.0; theta <= 0.5 * kPi; theta += 0.1)
        CHECK(alpha_beta(theta, {1.2, 0.4}, 0.0).alpha == 0.0);

    const IntegrandPoint pt = alpha_beta(0.25 * kPi, {1.0, 0.0}, 1.0);
    CHECK(pt.alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(pt.beta == doctest::Approx(0.5).epsilon(1e-15));

    // beta has its minimum at theta = pi/4 when p_l > 0
    const LagParams p{1.0, 0.6};
    const double bmin = alpha_beta(0.25 * kPi, p, 0.3).beta;
    for (double theta = 0.0; theta <= 0.5 * kPi; theta += 0.01)
        CHECK(alpha_beta(theta, p, 0.3).beta >= bmin - 1e-15);

    CHECK_THROWS_AS(alpha_beta(0.1, {1.0, 1.0}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(alpha_beta(0.1, {-1.0, 0.0}, 0.3), std::invalid_argument);
}

TEST_CASE("d1 and d2") {
    const LagParams p{1.4, 0.2};
    for (double theta = 0.0; theta <= 0.5 * kPi; theta += 0.13) {
        CHECK(d1(theta, p, 0.0) == 0.0);
        CHECK(d2(theta, p, 0.0) == 0.0);
    }
    // symmetry about pi/4
    for (double theta = 0.0; theta <= 0.25 * kPi; theta += 0.05) {
        CHECK(d2(theta, p, 0.3) ==
              doctest::Approx(d2(0.5 * kPi - theta, p, 0.3)).epsilon(1e-13));
        CHECK(d1(theta, p, 0.3) ==
              doctest::Approx(d1(0.5 * kPi - theta, p, 0.3)).epsilon(1e-13));
    }

    // independent scalar computation of d1(pi/4; 1.4, 0.2, 0.3)
    const double a = 0.3 * std::sqrt(2.0) / 1.6;
    const double b = (1.4 - 0.2) / (2.0 * (1.4 * 1.4 - 0.2 * 0.2));
    const double expected = std::sqrt(kPi / b) * (a / b) *
                            (0.5 * std::erfc(a / std::sqrt(2.0 * b) / std::sqrt(2.0))) *
                            std::exp(a * a / (4.0 * b));
    const double got = d1(0.25 * kPi, p, 0.3);
    CHECK(got > 0.0);
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(got == doctest::Approx(1.0492251953372715).epsilon(1e-12));
    CHECK(d2(0.25 * kPi, p, 0.3) == doctest::Approx(1.4230338886844274).epsilon(1e-12));

    // combined difference agrees with the two pieces
    for (double theta = 0.1; theta < 0.5 * kPi; theta += 0.2)
        CHECK(d2_minus_d1(theta, p, 0.3) ==
              doctest::Approx(d2(theta, p, 0.3) - d1(theta, p, 0.3)).epsilon(1e-11));

    CHECK_THROWS_WITH_AS(d2(0.25 * kPi, {1.0, 0.9}, 1e6),
                         doctest::Contains("exponent overflow"), std::domain_error);
}

TEST_CASE("closed_term") {
    CHECK(closed_term({2.5, 0.0}) == doctest::Approx(kPi * 2.5).epsilon(1e-15));
    CHECK(closed_term({1.0, 1.0 - 1e-9}) < 1e-3);  // vanishes at the boundary
    CHECK(closed_term({1.0, 0.5}) == doctest::Approx(3.6275987284684357).epsilon(1e-12));
    // against quadrature of 1/beta
    for (const auto& [p0, pl] : {std::pair{1.0, 0.5}, {1.4, -0.9}, {0.7, 0.3}}) {
        const LagParams p{p0, pl};
        const double quad = oracle::integrate(
            [&](double t) { return 1.0 / alpha_beta(t, p, 0.0).beta; }, 0.0,
            0.5 * kPi, 1e-11);
        CHECK(std::abs(closed_term(p) - quad) < 1e-9);
    }
}

TEST_CASE("ry_reference reductions") {
    // d = 0 collapses to the arcsine law
    for (const double pl : {-0.9, -0.5, 0.0, 0.5, 0.9})
        CHECK(std::abs(ry_reference({1.0, pl}, 0.0) - arcsine_classical(1.0, pl)) < 1e-8);

    // p_l = 0 decouples the pair: E{y_i y_j} = mu^2
    for (const auto& [p0, d] : {std::pair{1.0, 0.3}, {1.4, 0.7}, {0.6, 0.1}}) {
        const double mu = 2.0 * special::q(d / std::sqrt(p0)) - 1.0;
        CHECK(std::abs(ry_reference({p0, 0.0}, d) - mu * mu) < 1e-8);
    }

    CHECK(ry_reference({1.0, 0.3}, 0.3) ==
          doctest::Approx(0.23492103563882005).epsilon(1e-8));

    CHECK_THROWS_AS(ry_reference({1.0, 0.3}, 0.3, 1e-5), std::invalid_argument);
    CHECK_THROWS_AS(ry_reference({1.0, 0.3}, 0.3, 1e-13), std::invalid_argument);
}

TEST_CASE("ry_reference against pair simulation") {
    const auto mc = oracle::sign_product_mc(1.0, 0.3, 0.3, 1000000, 20240811u);
    const double ref = ry_reference({1.0, 0.3}, 0.3);
    CHECK(std::abs(ref - mc.mean) < 3.0 * mc.std_error);
}

TEST_CASE("ry_reference monotone in p_l and bounded") {
    for (const double d : {0.1, 0.3, 0.7}) {
        double prev = ry_reference({1.0, -0.95}, d);
        for (double pl = -0.9; pl <= 0.95; pl += 0.05) {
            const double v = ry_reference({1.0, pl}, d);
            CHECK(v > prev);
            CHECK(std::abs(v) <= 1.0);
            prev = v;
        }
    }
}

TEST_CASE("ry_reference scale invariance") {
    // depends only on (p_l/p0, d/sqrt(p0))
    for (const double c : {0.25, 2.0, 7.5}) {
        for (const auto& [p0, pl, d] :
             {std::tuple{1.0, 0.3, 0.3}, {1.4, -0.6, 0.5}, {0.8, 0.7, 0.1}}) {
            const double base = ry_reference({p0, pl}, d);
            const double scaled = ry_reference({c * p0, c * pl}, std::sqrt(c) * d);
            CHECK(std::abs(base - scaled) < 1e-8);
        }
    }
}

TEST_CASE("arcsine_classical") {
    CHECK(arcsine_classical(1.0, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(arcsine_classical(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(arcsine_classical(2.0, -2.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS(arcsine_classical(1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(arcsine_classical(0.0, 0.0), std::invalid_argument);
}
