#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "vacrad/mie.hpp"

using namespace vacrad;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("below-threshold rate is exactly zero") {
    const ReducedMieParams p(0.9, 0.01);
    for (const double theta : {0.0, 0.7, pi / 2.0, pi}) {
        CHECK(mie_angular_rate(p, theta).per_steradian == 0.0);
    }
    CHECK(mie_total_rate(p) == 0.0);
    CHECK(mie_total_rate(ReducedMieParams(1.0, 0.3)) == 0.0);
}

TEST_CASE("isotropic emission at rho = sqrt(2)") {
    const ReducedMieParams p(std::numbers::sqrt2, 0.02);
    const double expected = 0.25 * p.beta * p.beta *
                            std::pow(std::numbers::sqrt2 - 1.0, 3);
    for (int i = 0; i <= 36; ++i) {
        const double v = mie_angular_rate(p, i * pi / 36.0).per_steradian;
        CHECK(v == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("on-axis versus orthogonal ratio just above threshold") {
    const ReducedMieParams p(1.01, 0.01);
    const double ratio = mie_angular_rate(p, 0.0).per_steradian /
                         mie_angular_rate(p, pi / 2.0).per_steradian;
    CHECK(ratio == doctest::Approx(2.0 / (1.01 * 1.01)).epsilon(1e-12));
}

TEST_CASE("direct substitution value at rho = 2") {
    // (1e-4/4) * 1 * (2/4) = 1.25e-5
    const ReducedMieParams p(2.0, 0.01);
    CHECK(mie_angular_rate(p, 0.0).per_steradian == doctest::Approx(1.25e-5).epsilon(1e-14));
    // Eq. total: (2/3)(1e-4)(1.5)^2 = 1.5e-4
    CHECK(mie_total_rate(p) == doctest::Approx(1.5e-4).epsilon(1e-14));
}

TEST_CASE("total rate asymptote at large rho") {
    const ReducedMieParams p(1e3, 0.01);
    const double scaled = mie_total_rate(p) / (p.beta * p.beta * p.rho * p.rho * p.rho);
    CHECK(std::abs(scaled - 2.0 / 3.0) / (2.0 / 3.0) < 4e-3);
}

TEST_CASE("quadrature reproduces the closed-form angular integral") {
    const QuadratureSpec q(16, 32, 1e-12);
    CHECK(mie_total_rate_quadrature(ReducedMieParams(0.5, 0.01), q) == 0.0);
    for (const double rho : {1.1, 2.0, 5.0}) {
        const ReducedMieParams p(rho, 0.01);
        const double quad = mie_total_rate_quadrature(p, q);
        const double closed = mie_total_rate_integral_closed_form(p);
        CHECK(std::abs(quad - closed) / closed < 1e-10);
    }
}

TEST_CASE("published total rate and angular integral disagree by the known factor") {
    for (const double rho : {1.2, 2.0, 10.0}) {
        const ReducedMieParams p(rho, 0.01);
        const double measured = mie_total_rate_integral_closed_form(p) / mie_total_rate(p);
        CHECK(measured == doctest::Approx(mie_angular_vs_total_discrepancy(p)).epsilon(1e-13));
    }
}

TEST_CASE("angular rate properties over random parameters") {
    std::mt19937 gen(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double rho = 0.2 + 5.0 * u(gen);
        const double beta = 0.5 * u(gen);
        const double theta = pi * u(gen);
        const ReducedMieParams p(rho, beta);

        // Heaviside gate
        if (rho <= 1.0) CHECK(mie_angular_rate(p, theta).per_steradian == 0.0);

        // theta -> pi - theta symmetry
        const double a = mie_angular_rate(p, theta).per_steradian;
        const double b = mie_angular_rate(p, pi - theta).per_steradian;
        CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::max(a, b)));

        // exact beta^2 scaling
        if (beta < 0.49) {
            const ReducedMieParams doubled(rho, 2.0 * beta);
            CHECK(mie_angular_rate(doubled, theta).per_steradian == 4.0 * a);
            CHECK(mie_total_rate(doubled) == 4.0 * mie_total_rate(p));
        }
    }
}

TEST_CASE("total rate increases with rho above threshold") {
    double prev = 0.0;
    for (double rho = 1.001; rho < 30.0; rho *= 1.17) {
        const double rate = mie_total_rate(ReducedMieParams(rho, 0.01));
        CHECK(rate > prev);
        prev = rate;
    }
}

TEST_CASE("anisotropy crossover at rho = sqrt(2)") {
    const double eps = 1e-9;
    const auto on_axis_minus_orthogonal = [](double rho) {
        const ReducedMieParams p(rho, 0.01);
        return mie_angular_rate(p, 0.0).per_steradian -
               mie_angular_rate(p, pi / 2.0).per_steradian;
    };
    CHECK(on_axis_minus_orthogonal(std::numbers::sqrt2 * (1.0 - eps)) > 0.0);
    CHECK(on_axis_minus_orthogonal(std::numbers::sqrt2 * (1.0 + eps)) < 0.0);
}

TEST_CASE("multi-level sum") {
    const double beta = 0.01;
    const double theta = 0.9;
    const TransitionSpec t{0.5, 2.0, 1.0}; // omega_s = omega_cm/2 -> rho_s = 2
    const std::vector<TransitionSpec> one{t};
    const std::vector<TransitionSpec> two{t, t};

    const double singleton = mie_multilevel_angular(one, beta, theta);
    const ReducedMieParams p(2.0, beta);
    CHECK(singleton == doctest::Approx(2.0 * mie_angular_rate(p, theta).per_steradian).epsilon(1e-14));
    CHECK(mie_multilevel_angular(two, beta, theta) == doctest::Approx(2.0 * singleton).epsilon(1e-14));

    const std::vector<TransitionSpec> closed{{1.0, 1.0, 1.0}, {2.5, 0.3, 1.0}};
    CHECK(mie_multilevel_angular(closed, beta, theta) == 0.0);

    CHECK_THROWS_AS(mie_multilevel_angular({}, beta, theta), std::invalid_argument);
}

TEST_CASE("polar profile") {
    SUBCASE("isotropic case is all ones") {
        const SpectrumTable t = mie_polar_profile(ReducedMieParams(std::numbers::sqrt2, 0.01), 19);
        REQUIRE(t.rows() == 19);
        for (const double v : t.values[0]) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("known normalized values") {
        const SpectrumTable narrow = mie_polar_profile(ReducedMieParams(1.01, 0.01), 3);
        CHECK(narrow.values[0][1] == doctest::Approx(1.01 * 1.01 / 2.0).epsilon(1e-12)); // theta = pi/2
        const SpectrumTable wide = mie_polar_profile(ReducedMieParams(3.0, 0.01), 3);
        CHECK(wide.values[0][1] == doctest::Approx(4.5).epsilon(1e-12));
    }
    SUBCASE("below threshold is an error") {
        CHECK_THROWS_AS(mie_polar_profile(ReducedMieParams(0.8, 0.01), 10), std::invalid_argument);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ReducedMieParams(0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ReducedMieParams(-1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ReducedMieParams(2.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(ReducedMieParams(2.0, 1.0), std::invalid_argument);
}
