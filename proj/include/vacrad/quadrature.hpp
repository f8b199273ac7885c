#ifndef VACRAD_QUADRATURE_HPP
#define VACRAD_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "vacrad/exec.hpp"
#include "vacrad/geometry.hpp"

namespace vacrad {

/// Node counts and convergence target for the solid-angle quadratures.
/// Gauss-Legendre in cos(theta) tensored with a uniform rule in phi; both
/// are exact for the low-order trigonometric polynomials that appear here,
/// so small node counts already reach machine precision.
struct QuadratureSpec {
    int n_theta = 16;
    int n_phi = 32;
    double tolerance = 1e-12;

    QuadratureSpec() = default;
    QuadratureSpec(int n_theta_, int n_phi_, double tolerance_)
        : n_theta(n_theta_), n_phi(n_phi_), tolerance(tolerance_) {
        if (n_theta < 8) throw std::invalid_argument("QuadratureSpec: n_theta must be >= 8");
        if (n_phi < 8) throw std::invalid_argument("QuadratureSpec: n_phi must be >= 8");
        if (!(tolerance > 0.0)) throw std::invalid_argument("QuadratureSpec: tolerance must be > 0");
    }

    QuadratureSpec doubled() const { return QuadratureSpec(2 * n_theta, 2 * n_phi, tolerance); }
};

/// Node doubling still moved the result by more than the requested
/// tolerance; the configuration is unusable rather than silently degraded.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

using SphereFunction = std::function<double(const Direction&)>;

/// Single-resolution quadrature of f over the unit sphere (no convergence
/// check); building block for the node-doubling wrapper below.
double solid_angle_integrate_fixed(const SphereFunction& f, const QuadratureSpec& q,
                                   Exec exec = Exec::Serial);

/// Integral of f over the unit sphere. Computed at q and at doubled node
/// counts; throws QuadratureError if the two differ by more than
/// q.tolerance (relative, with an absolute floor for near-zero integrals).
/// The refined value is returned.
double solid_angle_integrate(const SphereFunction& f, const QuadratureSpec& q,
                             Exec exec = Exec::Serial);

} // namespace vacrad

#endif
