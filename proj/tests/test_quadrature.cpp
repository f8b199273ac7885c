#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vacrad/quadrature.hpp"

using namespace vacrad;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("gauss-legendre integrates even cosine powers exactly") {
    // n-node rule is exact through degree 2n-1; checked for cos^(2m), m <= 4.
    const GaussLegendreRule rule = gauss_legendre(8);
    for (int m = 0; m <= 4; ++m) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * std::pow(rule.nodes[i], 2 * m);
        CHECK(sum == doctest::Approx(2.0 / (2 * m + 1)).epsilon(1e-14));
    }
}

TEST_CASE("gauss-legendre weights sum to interval length") {
    for (const int n : {8, 13, 32, 64}) {
        const GaussLegendreRule rule = gauss_legendre(n);
        double sum = 0.0;
        for (const double w : rule.weights) sum += w;
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("solid angle moments") {
    const QuadratureSpec q(8, 8, 1e-12);
    const double sphere = solid_angle_integrate([](const Direction&) { return 1.0; }, q);
    CHECK(std::abs(sphere - 4.0 * pi) < 1e-12);

    const double cos2 = solid_angle_integrate(
        [](const Direction& d) { return std::cos(d.theta) * std::cos(d.theta); }, q);
    CHECK(std::abs(cos2 - 4.0 * pi / 3.0) < 1e-12);

    const double sin2 = solid_angle_integrate(
        [](const Direction& d) { return std::sin(d.theta) * std::sin(d.theta); }, q);
    CHECK(std::abs(sin2 - 8.0 * pi / 3.0) < 1e-12);
}

TEST_CASE("non-convergent integrand raises") {
    // cos(8 phi) aliases to a constant on the 8-point phi grid but not on
    // the doubled one, so the node-doubling check must trip.
    const QuadratureSpec q(8, 8, 1e-12);
    const auto nasty = [](const Direction& d) { return std::cos(8.0 * d.phi); };
    CHECK_THROWS_AS(solid_angle_integrate(nasty, q), QuadratureError);
}

TEST_CASE("quadrature spec validation") {
    CHECK_THROWS_AS(QuadratureSpec(4, 32, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec(16, 4, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec(16, 32, 0.0), std::invalid_argument);
}

TEST_CASE("serial and parallel quadrature agree bitwise") {
    const QuadratureSpec q(16, 32, 1e-12);
    const auto f = [](const Direction& d) {
        return std::exp(std::cos(d.theta)) * (1.0 + 0.25 * std::cos(2.0 * d.phi));
    };
    const double serial = solid_angle_integrate_fixed(f, q, Exec::Serial);
    const double parallel = solid_angle_integrate_fixed(f, q, Exec::Parallel);
    CHECK(serial == parallel);
}
