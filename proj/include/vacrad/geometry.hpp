#ifndef VACRAD_GEOMETRY_HPP
#define VACRAD_GEOMETRY_HPP

#include <stdexcept>

#include "vacrad/vec3.hpp"

namespace vacrad {

/// Emission direction in polar coordinates about the motion axis.
/// theta in [0, pi], phi in [0, 2*pi).
struct Direction {
    double theta;
    double phi;

    Direction(double theta_, double phi_);
};

/// TE: electric field perpendicular to the plane spanned by the emission
/// direction and the motion axis. TM: electric field inside that plane.
enum class Polarization { TE, TM };

/// A photon of the emitted pair: direction, reduced frequency
/// x = omega/omega_cm in (0, 1), polarization.
struct PhotonMode {
    Direction dir;
    double x;
    Polarization pol;

    PhotonMode(Direction d, double x_, Polarization p);
};

struct PolarizationBasis {
    Vec3 te;
    Vec3 tm;
};

Vec3 direction_to_unit(const Direction& dir);

/// Transverse unit vectors for a propagation direction. te is perpendicular
/// to both k and the motion axis; tm = k x te, so (te, tm, k) is a
/// right-handed triad. At the poles the plane degenerates and the
/// continuous limit (-sin phi, cos phi, 0) is used for te.
PolarizationBasis polarization_basis(const Direction& dir);

inline const Vec3& polarization_vector(const PolarizationBasis& basis, Polarization pol) {
    return pol == Polarization::TE ? basis.te : basis.tm;
}

} // namespace vacrad

#endif
