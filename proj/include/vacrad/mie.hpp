#ifndef VACRAD_MIE_HPP
#define VACRAD_MIE_HPP

#include <span>

#include "vacrad/params.hpp"
#include "vacrad/quadrature.hpp"
#include "vacrad/table.hpp"

namespace vacrad {

/// Angular emission rate density, in units of Gamma_0 per steradian.
struct MieAngularValue {
    double per_steradian;
};

/// One-photon emission rate per solid angle at polar angle theta:
///
///   (beta^2/4) * H(rho - 1) * (rho - 1)^3 * [2 cos^2(theta)/rho^2 + sin^2(theta)]
///
/// Exactly zero below threshold (rho <= 1), including the boundary where the
/// cubic factor vanishes.
MieAngularValue mie_angular_rate(const ReducedMieParams& p, double theta);

/// Total excitation rate in units of Gamma_0:
///
///   (2/3) beta^2 * H(rho - 1) * (1 + 1/rho)^2 * (rho - 1)^3
///
/// Note this closed form and the solid-angle integral of the angular
/// density are NOT the same function of rho; see
/// mie_angular_vs_total_discrepancy.
double mie_total_rate(const ReducedMieParams& p);

/// Solid-angle quadrature of mie_angular_rate. Closed form of the integral:
/// (2*pi/3) beta^2 H(rho-1) (rho-1)^3 (1 + 1/rho^2).
double mie_total_rate_quadrature(const ReducedMieParams& p, const QuadratureSpec& q,
                                 Exec exec = Exec::Serial);

/// Analytic value of the integral computed by mie_total_rate_quadrature.
double mie_total_rate_integral_closed_form(const ReducedMieParams& p);

/// Ratio (integral of the angular density) / (closed-form total rate),
/// equal to pi (1 + 1/rho^2) / (1 + 1/rho)^2 above threshold. The two
/// published forms disagree by this factor; callers report it rather than
/// silently preferring either form.
double mie_angular_vs_total_discrepancy(const ReducedMieParams& p);

/// Angular rate density summed over a set of transitions, each weighted by
/// its own spontaneous rate. Transitions at or above the mechanical
/// frequency (omega_ratio >= 1) contribute nothing. Units follow gamma_s.
double mie_multilevel_angular(std::span<const TransitionSpec> transitions, double beta,
                              double theta);

/// Normalized polar profile value(theta)/value(0) on a uniform theta grid
/// over [0, pi]. Requires rho > 1 (below threshold there is nothing to
/// normalize).
SpectrumTable mie_polar_profile(const ReducedMieParams& p, int n_theta,
                                Exec exec = Exec::Serial);

} // namespace vacrad

#endif
