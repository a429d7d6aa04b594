#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "onebit/special.hpp"
#include "oracles.hpp"

using namespace onebit::special;

TEST_CASE("q basics") {
    CHECK(q(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    for (const double x : {-4.0, -1.3, -0.2, 0.7, 2.9, 5.5})
        CHECK(q(x) + q(-x) == doctest::Approx(1.0).epsilon(1e-13));
    // strictly decreasing
    double prev = q(-8.0);
    for (double x = -7.5; x <= 8.0; x += 0.5) {
        CHECK(q(x) < prev);
        prev = q(x);
    }
}

TEST_CASE("q against the defining integral") {
    // quadrature of the tail integral, truncated where the mass is < 1e-14
    const auto tail = [](double x) {
        return oracle::integrate(
            [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); },
            x, 9.0, 1e-13);
    };
    CHECK(std::abs(q(1.0) - tail(1.0)) < 1e-10);
    CHECK(std::abs(q(1.0) - 0.15865525393145707) < 1e-12);
    CHECK(std::abs(q(0.3) - tail(0.3)) < 1e-10);
    CHECK(std::abs(q(2.2) - tail(2.2)) < 1e-10);
}

TEST_CASE("q_bar formula and accuracy band") {
    CHECK_THROWS_AS(q_bar(0.0), std::invalid_argument);
    CHECK_THROWS_AS(q_bar(-1.0), std::invalid_argument);
    CHECK(q_bar(40.0) < 1e-100);  // both exponentials vanish
    CHECK(std::abs(q_bar(1.0) - 0.17889850140086744) < 1e-15);
    // deviation from q on [0.5, 4]: 0.0234 at the left end, a second hump
    // of 0.0215 near x ~ 0.95, under 0.02 from x ~ 1.4 onward
    double worst = 0.0;
    for (double x = 0.5; x <= 4.0; x += 0.002) worst = std::max(worst, std::abs(q_bar(x) - q(x)));
    CHECK(worst < 0.024);
    worst = 0.0;
    for (double x = 1.5; x <= 4.0; x += 0.002) worst = std::max(worst, std::abs(q_bar(x) - q(x)));
    CHECK(worst < 0.02);
}

TEST_CASE("q_inv") {
    CHECK(q_inv(0.5) == 0.0);
    for (const double x : {-3.0, -1.0, 0.0, 1.0, 3.0})
        CHECK(std::abs(q_inv(q(x)) - x) < 1e-8);
    for (const double p : {0.9, 0.6, 0.2, 0.01})
        CHECK(std::abs(q(q_inv(p)) - p) < 1e-12);
    CHECK(std::abs(q_inv(0.158655) - 1.0) < 1e-5);
    CHECK_THROWS_AS(q_inv(0.0), std::invalid_argument);
    CHECK_THROWS_AS(q_inv(1.0), std::invalid_argument);
}

TEST_CASE("erf/erfc") {
    CHECK(onebit::special::erf(0.0) == 0.0);
    for (const double x : {0.3, 1.1, 2.7, 4.2})
        CHECK(onebit::special::erf(-x) == doctest::Approx(-onebit::special::erf(x)).epsilon(1e-14));
    CHECK(std::abs(onebit::special::erf(1.0) - 0.8427007929497148) < 1e-12);
    // consistency with q and with the C library implementation
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        CHECK(std::abs(onebit::special::erf(x) - (1.0 - 2.0 * q(x * kSqrt2))) < 1e-9);
        CHECK(std::abs(onebit::special::erf(x) - std::erf(x)) < 1e-12);
        CHECK(std::abs(onebit::special::erfc(x) - std::erfc(x)) < 1e-12);
    }
}

TEST_CASE("incomplete gamma closed forms") {
    CHECK(inc_gamma(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(inc_gamma(0.5, 0.0) == doctest::Approx(kSqrtPi).epsilon(1e-14));
    CHECK(inc_gamma(1.0, 2.0) == doctest::Approx(0.1353352832366127).epsilon(1e-14));
    CHECK_THROWS_AS(inc_gamma(0.25, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(inc_gamma(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre rules") {
    const auto r1 = legendre_nodes_weights(1);
    CHECK(r1.nodes[0] == 0.0);
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const auto r2 = legendre_nodes_weights(2);
    CHECK(r2.nodes[0] == doctest::Approx(-0.5773502691896258).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(0.5773502691896258).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(legendre_nodes_weights(0), std::invalid_argument);
    CHECK_THROWS_AS(legendre_nodes_weights(65), std::invalid_argument);

    for (const int n : {3, 8, 13, 40, 64}) {
        const auto r = legendre_nodes_weights(n);
        double wsum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(r.nodes[i] > -1.0);
            CHECK(r.nodes[i] < 1.0);
            CHECK(r.weights[i] > 0.0);
            if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
            // symmetry about 0
            CHECK(r.nodes[i] == doctest::Approx(-r.nodes[n - 1 - i]).epsilon(1e-15));
            wsum += r.weights[i];
        }
        CHECK(std::abs(wsum - 2.0) < 1e-13);
    }
}

TEST_CASE("Gauss-Legendre polynomial exactness") {
    // int_{-1}^{1} x^k dx = 0 (k odd) or 2/(k+1) (k even); exact through 2n-1
    for (const int n : {2, 5, 13}) {
        const auto r = legendre_nodes_weights(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
            const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
            CHECK(std::abs(s - exact) < 1e-12);
        }
    }
}
