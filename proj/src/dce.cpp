#include "vacrad/dce.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacrad {

double static_polarizability(std::span<const TransitionSpec> transitions) {
    return dynamic_polarizability(transitions, 0.0);
}

double dynamic_polarizability(std::span<const TransitionSpec> transitions, double omega) {
    double sum = 0.0;
    for (const TransitionSpec& t : transitions) {
        if (t.omega_ratio == 0.0)
            throw std::invalid_argument("polarizability: degenerate transition (omega_eg = 0)");
        const double denom = t.omega_ratio * t.omega_ratio - omega * omega;
        sum += t.omega_ratio * t.dipole_sq / denom;
    }
    return (2.0 / 3.0) * sum;
}

PairBracket pair_bracket(const PhotonMode& mode1, const PhotonMode& mode2) {
    const Vec3 k1 = direction_to_unit(mode1.dir);
    const Vec3 k2 = direction_to_unit(mode2.dir);
    const Vec3 e1 = polarization_vector(polarization_basis(mode1.dir), mode1.pol);
    const Vec3 e2 = polarization_vector(polarization_basis(mode2.dir), mode2.pol);

    const Vec3 wave_sum = mode1.x * k1 + mode2.x * k2;
    return {dot(e1, e2) * wave_sum + cross(cross(k1, e1), e2) + cross(cross(k2, e2), e1)};
}

PairAmplitude pair_amplitude(const PhotonMode& mode1, const PhotonMode& mode2,
                             double reduced_time) {
    if (!(reduced_time > 0.0))
        throw std::invalid_argument("pair_amplitude: reduced_time must be > 0");
    const double dw = mode1.x + mode2.x - 1.0;
    const double half_phase = 0.5 * dw * reduced_time;
    // sin(dw t/2)/dw with the exact resonant limit t/2.
    const double sinc = dw == 0.0 ? 0.5 * reduced_time : std::sin(half_phase) / dw;
    const double projection = dot(motion_axis, pair_bracket(mode1, mode2).vec);
    const std::complex<double> phase(std::cos(half_phase), std::sin(half_phase));
    return {-std::sqrt(mode1.x * mode2.x) * sinc * projection * phase, dw};
}

double dce_angular_shape(double x, double theta, Polarization pol) {
    const double c2 = std::cos(theta) * std::cos(theta);
    const double u = 1.0 - x;
    if (pol == Polarization::TE) return u * u * (5.0 * c2 + 2.0) + 5.0 * x;
    return u * (1.0 - 6.0 * x) * c2 + u * u + 5.0;
}

namespace {

double frequency_weight(double x) {
    const double u = 1.0 - x;
    return x * x * x * u * u * u;
}

void check_unit_interval(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(who) + ": x must lie in [0, 1]");
}

} // namespace

double dce_angular_spectrum(double x, double theta, Polarization pol) {
    check_unit_interval(x, "dce_angular_spectrum");
    return frequency_weight(x) * dce_angular_shape(x, theta, pol);
}

double dce_frequency_shape(double x, Polarization pol) {
    if (pol == Polarization::TE) return (11.0 * x - 7.0) * x + 11.0;
    return (9.0 * x - 13.0) * x + 19.0;
}

double dce_frequency_spectrum(double x, Polarization pol) {
    check_unit_interval(x, "dce_frequency_spectrum");
    return frequency_weight(x) * dce_frequency_shape(x, pol);
}

double dce_total_spectrum(double x) {
    check_unit_interval(x, "dce_total_spectrum");
    // Written in terms of y = x(1-x) so the x <-> 1-x symmetry is exact in
    // floating point, not merely up to rounding.
    const double y = x * (1.0 - x);
    return (2.0 / 3.0) * y * y * y * (1.0 - (2.0 / 3.0) * y);
}

namespace {

// int_0^1 x^(3+k) (1-x)^3 dx as an exact rational, k = 0, 1, 2.
double beta_moment(int k) {
    // 3!(3+k)!/(7+k)! -> 1/140, 1/280, 1/504.
    switch (k) {
        case 0: return 1.0 / 140.0;
        case 1: return 1.0 / 280.0;
        case 2: return 1.0 / 504.0;
        default: throw std::logic_error("beta_moment: unsupported power");
    }
}

// int_0^1 x^3 (1-x)^3 (c2 x^2 + c1 x + c0) dx
double weighted_polynomial_integral(double c2, double c1, double c0) {
    return c2 * beta_moment(2) + c1 * beta_moment(1) + c0 * beta_moment(0);
}

} // namespace

DceRates dce_rates() {
    // Moments of the TE/TM frequency polynomials: 19/252 and 27/252.
    const double moment_te = weighted_polynomial_integral(11.0, -7.0, 11.0);
    const double moment_tm = weighted_polynomial_integral(9.0, -13.0, 19.0);
    const double norm = 1.0 / (45.0 * std::numbers::pi);
    DceRates r;
    r.gamma_te = moment_te * norm;
    r.gamma_tm = moment_tm * norm;
    r.gamma_total = (moment_te + moment_tm) * norm;
    r.tm_te_ratio = moment_tm / moment_te;
    return r;
}

SphereComparison sphere_rate_comparison(double alpha_sphere_over_alpha0) {
    if (!(alpha_sphere_over_alpha0 > 0.0))
        throw std::invalid_argument("sphere_rate_comparison: polarizability ratio must be > 0");
    const double pi = std::numbers::pi;
    SphereComparison c;
    c.gamma_sphere = alpha_sphere_over_alpha0 * alpha_sphere_over_alpha0 / (10368.0 * pi * pi * pi);
    c.atom_over_sphere = dce_rates().gamma_total / c.gamma_sphere;
    return c;
}

} // namespace vacrad
