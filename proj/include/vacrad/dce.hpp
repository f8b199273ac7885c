#ifndef VACRAD_DCE_HPP
#define VACRAD_DCE_HPP

#include <complex>
#include <span>

#include "vacrad/geometry.hpp"
#include "vacrad/params.hpp"

namespace vacrad {

/// The bracketed 3-vector of the pair-creation amplitude,
///
///   (eps1 . eps2)(x1 k1 + x2 k2) + (k1 x eps1) x eps2 + (k2 x eps2) x eps1
///
/// with wave vectors in reduced form x_j = omega_j/omega_cm.
struct PairBracket {
    Vec3 vec;
};

/// Two-photon amplitude with the dimensional prefactor
/// 2 pi alpha0 v_m (omega1 omega2)^(1/2) / (L^3 c) factored out.
/// delta_omega is the reduced detuning x1 + x2 - 1.
struct PairAmplitude {
    std::complex<double> value;
    double delta_omega;
};

/// Static polarizability (2/3) sum_s dipole_sq / omega_ratio in reduced
/// units (hbar absorbed). Empty list gives 0; a zero transition frequency is
/// a degenerate-transition error.
double static_polarizability(std::span<const TransitionSpec> transitions);

/// Frequency-dependent polarizability
/// (2/3) sum_s omega_s dipole_sq / (omega_s^2 - omega^2); reduces to
/// static_polarizability at omega = 0. Not used by the spectra below, which
/// assume the static limit throughout.
double dynamic_polarizability(std::span<const TransitionSpec> transitions, double omega);

PairBracket pair_bracket(const PhotonMode& mode1, const PhotonMode& mode2);

/// Finite-time pair amplitude
///   -(x1 x2)^(1/2) e^(i dw tau/2) sin(dw tau/2)/dw (a . bracket)
/// in reduced units, tau = t * omega_cm. At zero detuning the sinc factor
/// takes its exact limit tau/2.
PairAmplitude pair_amplitude(const PhotonMode& mode1, const PhotonMode& mode2,
                             double reduced_time);

/// Angular polynomials of the stationary pair spectra.
/// TE: (1-x)^2 (5 cos^2 theta + 2) + 5x
/// TM: (1-x)(1-6x) cos^2 theta + (1-x)^2 + 5
double dce_angular_shape(double x, double theta, Polarization pol);

/// Photon rate per unit time, solid angle and frequency interval,
/// x^3 (1-x)^3 * f(x, theta), in units of (alpha0 v_m)^2 omega_cm^6 / (60 pi^2 c^8).
/// The endpoints x = 0, 1 are accepted and give 0.
double dce_angular_spectrum(double x, double theta, Polarization pol);

/// Frequency polynomials of the angle-integrated spectra.
/// TE: 11x^2 - 7x + 11;  TM: 9x^2 - 13x + 19.
double dce_frequency_shape(double x, Polarization pol);

/// Rate per unit time and frequency interval, x^3 (1-x)^3 * F(x), in units
/// of (alpha0 v_m)^2 omega_cm^6 / (45 pi c^8).
double dce_frequency_spectrum(double x, Polarization pol);

/// Polarization-summed spectrum (2/3) y^3 (1 - (2/3) y), y = x(1-x), in
/// units of (alpha0 a)^2 omega_cm^8 / (pi c^8); manifestly symmetric under
/// x -> 1-x.
double dce_total_spectrum(double x);

/// Frequency-integrated emission rates in units of (alpha0 a)^2 omega_cm^9 / c^8,
/// assembled from the exact moment integrals
/// int_0^1 x^3 (1-x)^3 x^k dx = 3!(3+k)!/(7+k)!.
struct DceRates {
    double gamma_te;
    double gamma_tm;
    double gamma_total;   // 23/(5670 pi)
    double tm_te_ratio;   // 27/19
};

DceRates dce_rates();

/// Emission rate of a small oscillating metallic sphere with polarizability
/// ratio alpha_sphere/alpha0, in the same reduced units, and the atom/sphere
/// rate ratio.
struct SphereComparison {
    double gamma_sphere;
    double atom_over_sphere;
};

SphereComparison sphere_rate_comparison(double alpha_sphere_over_alpha0);

} // namespace vacrad

#endif
