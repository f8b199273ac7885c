#include "vacrad/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace vacrad {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration seeded with the Chebyshev-like estimate; roots come
    // in +/- pairs so only the lower half is solved.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: evaluates P_n(x) and P_{n-1}(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double solid_angle_integrate_fixed(const SphereFunction& f, const QuadratureSpec& q, Exec exec) {
    const GaussLegendreRule rule = gauss_legendre(q.n_theta);
    const int nt = q.n_theta;
    const int np = q.n_phi;
    const double dphi = 2.0 * std::numbers::pi / np;

    std::vector<double> samples(static_cast<std::size_t>(nt) * np);
    for_each_index(exec, static_cast<std::ptrdiff_t>(samples.size()), [&](std::ptrdiff_t idx) {
        const int i = static_cast<int>(idx / np);
        const int j = static_cast<int>(idx % np);
        const Direction dir(std::acos(rule.nodes[i]), j * dphi);
        samples[static_cast<std::size_t>(idx)] = f(dir);
    });

    // Index-ordered reduction: identical bits for both execution policies.
    double total = 0.0;
    for (int i = 0; i < nt; ++i) {
        double row = 0.0;
        for (int j = 0; j < np; ++j) row += samples[static_cast<std::size_t>(i) * np + j];
        total += rule.weights[i] * row;
    }
    return total * dphi;
}

double solid_angle_integrate(const SphereFunction& f, const QuadratureSpec& q, Exec exec) {
    const double coarse = solid_angle_integrate_fixed(f, q, exec);
    const double fine = solid_angle_integrate_fixed(f, q.doubled(), exec);
    // Relative test with a +1 floor so integrals that are zero up to
    // roundoff pass instead of tripping a 0/0 comparison.
    const double scale = std::max(std::abs(coarse), std::abs(fine));
    if (std::abs(fine - coarse) > q.tolerance * (scale + 1.0))
        throw QuadratureError("solid_angle_integrate: node doubling changed the result by more than the tolerance");
    return fine;
}

} // namespace vacrad
