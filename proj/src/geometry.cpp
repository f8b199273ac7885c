#include "vacrad/geometry.hpp"

#include <cmath>
#include <numbers>

namespace vacrad {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

Direction::Direction(double theta_, double phi_) : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::invalid_argument("Direction: theta must lie in [0, pi]");
    if (!(phi >= 0.0 && phi < two_pi))
        throw std::invalid_argument("Direction: phi must lie in [0, 2*pi)");
}

PhotonMode::PhotonMode(Direction d, double x_, Polarization p) : dir(d), x(x_), pol(p) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("PhotonMode: reduced frequency must lie in (0, 1)");
}

Vec3 direction_to_unit(const Direction& dir) {
    const double st = std::sin(dir.theta);
    return {st * std::cos(dir.phi), st * std::sin(dir.phi), std::cos(dir.theta)};
}

PolarizationBasis polarization_basis(const Direction& dir) {
    // te = (a x k)/|a x k|, which reduces to (-sin phi, cos phi, 0) for every
    // theta; the formula stays valid at the poles where the (k, a) plane is
    // undefined.
    const Vec3 te{-std::sin(dir.phi), std::cos(dir.phi), 0.0};
    const Vec3 k = direction_to_unit(dir);
    return {te, cross(k, te)};
}

} // namespace vacrad
