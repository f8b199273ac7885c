#ifndef VACRAD_PLANAR_HPP
#define VACRAD_PLANAR_HPP

#include <optional>

#include "vacrad/dce.hpp"
#include "vacrad/geometry.hpp"

namespace vacrad {

/// A photon pair obeying the in-phase planar constraints: x1 + x2 = 1,
/// vanishing transverse total wave vector, equal polarizations. exists is
/// false when no partner direction satisfies them.
struct ConstrainedPair {
    PhotonMode mode1;
    std::optional<PhotonMode> mode2;
    bool exists() const { return mode2.has_value(); }
};

/// Half-angle of the emission cone. Pairs with x > 1/2 are confined to
/// theta <= arcsin(1/x - 1) around the motion axis; for x <= 1/2 every
/// direction is allowed (nullopt).
std::optional<double> emission_cone_boundary(double x);

/// The unique partner of mode1 under the planar constraints: x2 = 1 - x1,
/// transverse components cancel (sin theta2 = x1 sin theta1 / (1 - x1),
/// phi2 = phi1 + pi), polarizations equal. The partner always propagates
/// into the upper half space (cos theta2 >= 0).
ConstrainedPair partner_mode(const PhotonMode& mode1);

/// Constrained angular shape |a . bracket(mode1, partner)|^2 x^3 (1-x)^3,
/// zero outside the cone. Arbitrary overall scale: only the shape is
/// meaningful.
double planar_angular_spectrum(double x, double theta, Polarization pol);

} // namespace vacrad

#endif
