#include "vacrad/mie.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacrad {

namespace {

// Angular bracket 2 cos^2/rho^2 + sin^2 times the threshold prefactor.
double angular_kernel(double rho, double beta, double theta) {
    if (rho <= 1.0) return 0.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double cube = (rho - 1.0) * (rho - 1.0) * (rho - 1.0);
    return 0.25 * beta * beta * cube * (2.0 * c * c / (rho * rho) + s * s);
}

} // namespace

MieAngularValue mie_angular_rate(const ReducedMieParams& p, double theta) {
    return {angular_kernel(p.rho, p.beta, theta)};
}

double mie_total_rate(const ReducedMieParams& p) {
    if (p.rho <= 1.0) return 0.0;
    const double cube = (p.rho - 1.0) * (p.rho - 1.0) * (p.rho - 1.0);
    const double onep = 1.0 + 1.0 / p.rho;
    return (2.0 / 3.0) * p.beta * p.beta * onep * onep * cube;
}

double mie_total_rate_quadrature(const ReducedMieParams& p, const QuadratureSpec& q, Exec exec) {
    return solid_angle_integrate(
        [&](const Direction& d) { return mie_angular_rate(p, d.theta).per_steradian; }, q, exec);
}

double mie_total_rate_integral_closed_form(const ReducedMieParams& p) {
    if (p.rho <= 1.0) return 0.0;
    const double cube = (p.rho - 1.0) * (p.rho - 1.0) * (p.rho - 1.0);
    return (2.0 * std::numbers::pi / 3.0) * p.beta * p.beta * cube * (1.0 + 1.0 / (p.rho * p.rho));
}

double mie_angular_vs_total_discrepancy(const ReducedMieParams& p) {
    if (p.rho <= 1.0) throw std::invalid_argument("mie_angular_vs_total_discrepancy: rho must be > 1");
    const double onep = 1.0 + 1.0 / p.rho;
    return std::numbers::pi * (1.0 + 1.0 / (p.rho * p.rho)) / (onep * onep);
}

double mie_multilevel_angular(std::span<const TransitionSpec> transitions, double beta,
                              double theta) {
    if (transitions.empty())
        throw std::invalid_argument("mie_multilevel_angular: transition list must be non-empty");
    double sum = 0.0;
    for (const TransitionSpec& t : transitions) {
        // omega_ratio = omega_s/omega_cm, so the per-transition rho is its
        // reciprocal; ratios >= 1 are below threshold.
        if (t.omega_ratio >= 1.0) continue;
        sum += t.gamma_s * angular_kernel(1.0 / t.omega_ratio, beta, theta);
    }
    return sum;
}

SpectrumTable mie_polar_profile(const ReducedMieParams& p, int n_theta, Exec exec) {
    if (n_theta < 2) throw std::invalid_argument("mie_polar_profile: need at least 2 angles");
    if (p.rho <= 1.0)
        throw std::invalid_argument("mie_polar_profile: empty spectrum, rho must be > 1");
    const double on_axis = mie_angular_rate(p, 0.0).per_steradian;
    return make_table(
        "theta", linspace(0.0, std::numbers::pi, n_theta), {"normalized"},
        {[&](double theta) { return mie_angular_rate(p, theta).per_steradian / on_axis; }},
        "dimensionless (rate relative to theta = 0)", exec);
}

} // namespace vacrad
