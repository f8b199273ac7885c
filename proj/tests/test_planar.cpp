#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vacrad/planar.hpp"

using namespace vacrad;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double deg = pi / 180.0;
}

TEST_CASE("emission cone boundary") {
    CHECK(!emission_cone_boundary(0.3).has_value());
    CHECK(!emission_cone_boundary(0.5).has_value()); // arcsin argument exactly 1

    const double theta0 = *emission_cone_boundary(0.7);
    CHECK(theta0 == doctest::Approx(std::asin(3.0 / 7.0)).epsilon(1e-14));
    CHECK(theta0 / deg == doctest::Approx(25.3769).epsilon(1e-4));

    CHECK(*emission_cone_boundary(0.99) / deg == doctest::Approx(0.5787).epsilon(1e-3));

    CHECK_THROWS_AS(emission_cone_boundary(0.0), std::invalid_argument);
    CHECK_THROWS_AS(emission_cone_boundary(1.0), std::invalid_argument);
}

TEST_CASE("partner construction") {
    SUBCASE("on-axis partner is on-axis") {
        for (const double x : {0.2, 0.5, 0.8}) {
            const ConstrainedPair pair =
                partner_mode(PhotonMode(Direction(0.0, 1.0), x, Polarization::TE));
            REQUIRE(pair.exists());
            CHECK(pair.mode2->dir.theta == 0.0);
            CHECK(pair.mode2->x == doctest::Approx(1.0 - x).epsilon(1e-15));
            CHECK(pair.mode2->pol == Polarization::TE);
        }
    }
    SUBCASE("outside the cone there is no partner") {
        const ConstrainedPair pair =
            partner_mode(PhotonMode(Direction(30.0 * deg, 0.0), 0.7, Polarization::TM));
        CHECK(!pair.exists());
    }
    SUBCASE("equal frequencies back-to-back along the interface") {
        const ConstrainedPair pair =
            partner_mode(PhotonMode(Direction(pi / 2.0, 0.25), 0.5, Polarization::TE));
        REQUIRE(pair.exists());
        CHECK(pair.mode2->dir.theta == doctest::Approx(pi / 2.0).epsilon(1e-14));
        CHECK(pair.mode2->dir.phi == doctest::Approx(0.25 + pi).epsilon(1e-14));
    }
}

TEST_CASE("constraint residuals of existing pairs") {
    std::mt19937 gen(31337);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int found = 0;
    for (int i = 0; i < 500; ++i) {
        const double x = 0.02 + 0.96 * u(gen);
        const Direction dir(pi * u(gen), 2.0 * pi * u(gen) * 0.999999);
        const Polarization pol = u(gen) < 0.5 ? Polarization::TE : Polarization::TM;
        const ConstrainedPair pair = partner_mode(PhotonMode(dir, x, pol));
        if (!pair.exists()) continue;
        ++found;

        const Vec3 k1 = direction_to_unit(pair.mode1.dir);
        const Vec3 k2 = direction_to_unit(pair.mode2->dir);
        const Vec3 total = pair.mode1.x * k1 + pair.mode2->x * k2;
        CHECK(norm(cross(motion_axis, total)) <= 1e-12);
        CHECK(pair.mode1.x + pair.mode2->x == 1.0);
        CHECK(pair.mode2->pol == pair.mode1.pol);
        CHECK(std::cos(pair.mode2->dir.theta) >= 0.0);
    }
    CHECK(found > 200);
}

TEST_CASE("partner involution on the physical half space") {
    std::mt19937 gen(4242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double x = 0.05 + 0.9 * u(gen);
        const Direction dir(0.5 * pi * u(gen), 2.0 * pi * u(gen) * 0.999999);
        const ConstrainedPair fwd = partner_mode(PhotonMode(dir, x, Polarization::TM));
        if (!fwd.exists()) continue;
        const ConstrainedPair back = partner_mode(*fwd.mode2);
        REQUIRE(back.exists());
        CHECK(std::abs(back.mode2->dir.theta - dir.theta) <= 1e-12);
        CHECK(std::abs(back.mode2->dir.phi - dir.phi) <= 1e-12);
        CHECK(std::abs(back.mode2->x - x) <= 1e-12);
    }
}

TEST_CASE("cone law on a full grid") {
    for (int ix = 1; ix < 100; ++ix)
        for (int it = 1; it < 100; ++it) {
            const double x = ix / 100.0;
            const double theta = it * pi / 100.0;
            const bool exists =
                partner_mode(PhotonMode(Direction(theta, 0.0), x, Polarization::TE)).exists();
            const bool allowed = std::sin(theta) <= std::min(1.0, 1.0 / x - 1.0);
            CHECK(exists == allowed);
        }
}

TEST_CASE("planar spectrum support and pole behavior") {
    SUBCASE("zero outside the cone") {
        const double theta0 = *emission_cone_boundary(0.7);
        for (int i = 1; i <= 50; ++i) {
            const double theta = theta0 + i * (pi / 2.0 - theta0) / 50.0;
            CHECK(planar_angular_spectrum(0.7, theta, Polarization::TE) == 0.0);
            CHECK(planar_angular_spectrum(0.7, theta, Polarization::TM) == 0.0);
        }
    }
    SUBCASE("TE and TM coincide on the axis") {
        for (int i = 1; i < 20; ++i) {
            const double x = i / 20.0;
            const double te = planar_angular_spectrum(x, 0.0, Polarization::TE);
            const double tm = planar_angular_spectrum(x, 0.0, Polarization::TM);
            CHECK(std::abs(te - tm) <= 1e-13);
            // on-axis pair has unit bracket projection
            const double u = 1.0 - x;
            CHECK(te == doctest::Approx(x * x * x * u * u * u).epsilon(1e-13));
        }
    }
    SUBCASE("TE peaks on the axis, TM dips there") {
        for (const double x : {0.3, 0.5, 0.7}) {
            const double te0 = planar_angular_spectrum(x, 0.0, Polarization::TE);
            const double tm0 = planar_angular_spectrum(x, 0.0, Polarization::TM);
            for (const double theta : {0.01, 0.05, 0.1}) {
                CHECK(planar_angular_spectrum(x, theta, Polarization::TE) < te0);
                CHECK(planar_angular_spectrum(x, theta, Polarization::TM) > tm0);
            }
        }
    }
    SUBCASE("TM lobe sits in the outer part of the cone") {
        // x = 0.7: the TM maximum lies well past 80% of the way to the cone
        // boundary, reproducing the near-edge TM lobe.
        const double theta0 = *emission_cone_boundary(0.7);
        double best_theta = 0.0, best = -1.0;
        for (int i = 0; i <= 20000; ++i) {
            const double theta = theta0 * i / 20000.0;
            const double v = planar_angular_spectrum(0.7, theta, Polarization::TM);
            if (v > best) {
                best = v;
                best_theta = theta;
            }
        }
        CHECK(best_theta > 0.8 * theta0);
        CHECK(best > planar_angular_spectrum(0.7, 0.0, Polarization::TM));
    }
    SUBCASE("equal-frequency TM lobe at 45 degrees") {
        // x = 1/2: |a . bracket|^2 = cos^2(theta) (1 + 2 sin^2(theta))^2 has
        // its maximum at exactly 45 degrees.
        double best_theta = 0.0, best = -1.0;
        for (int i = 0; i <= 9000; ++i) {
            const double theta = (pi / 2.0) * i / 9000.0;
            const double v = planar_angular_spectrum(0.5, theta, Polarization::TM);
            if (v > best) {
                best = v;
                best_theta = theta;
            }
        }
        CHECK(best_theta == doctest::Approx(pi / 4.0).epsilon(1e-3));
    }
}
