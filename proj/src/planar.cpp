#include "vacrad/planar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacrad {

namespace {
constexpr double pi = std::numbers::pi;
}

std::optional<double> emission_cone_boundary(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("emission_cone_boundary: x must lie in (0, 1)");
    const double arg = 1.0 / x - 1.0;
    if (arg >= 1.0) return std::nullopt;
    return std::asin(arg);
}

ConstrainedPair partner_mode(const PhotonMode& mode1) {
    const double x2 = 1.0 - mode1.x;
    // Transverse balance x2 sin(theta2) = x1 sin(theta1); no partner when
    // the required transverse component exceeds the partner's total one.
    const double transverse = mode1.x * std::sin(mode1.dir.theta);
    if (transverse > x2) return {mode1, std::nullopt};

    const double theta2 = std::asin(transverse / x2);
    const double phi2 = mode1.dir.phi < pi ? mode1.dir.phi + pi : mode1.dir.phi - pi;
    return {mode1, PhotonMode(Direction(theta2, phi2), x2, mode1.pol)};
}

double planar_angular_spectrum(double x, double theta, Polarization pol) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("planar_angular_spectrum: x must lie in (0, 1)");
    const ConstrainedPair pair = partner_mode(PhotonMode(Direction(theta, 0.0), x, pol));
    if (!pair.exists()) return 0.0;
    const double proj = dot(motion_axis, pair_bracket(pair.mode1, *pair.mode2).vec);
    const double u = 1.0 - x;
    return proj * proj * x * x * x * u * u * u;
}

} // namespace vacrad
