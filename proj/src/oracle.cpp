#include "vacrad/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vacrad/rng.hpp"

namespace vacrad {

namespace {

constexpr double pi = std::numbers::pi;

// Polarization-summed squared projection of the pair bracket onto the
// motion axis, as a function of the partner direction.
double partner_sum(const PhotonMode& mode1, const Direction& dir2, double x2) {
    double sum = 0.0;
    for (const Polarization pol2 : {Polarization::TE, Polarization::TM}) {
        const PhotonMode mode2(dir2, x2, pol2);
        const double proj = dot(motion_axis, pair_bracket(mode1, mode2).vec);
        sum += proj * proj;
    }
    return sum;
}

double frequency_weight(double x) {
    const double u = 1.0 - x;
    return x * x * x * u * u * u;
}

void check_open_interval(double x, const char* who) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument(std::string(who) + ": x must lie in (0, 1)");
}

} // namespace

TensorAverages polarization_tensor_averages(const QuadratureSpec& q, Exec exec) {
    const auto component = [&](auto&& integrand) {
        return solid_angle_integrate(integrand, q, exec) / (4.0 * pi);
    };

    TensorAverages t{};

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t.rank2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                component([&](const Direction& d) {
                    const PolarizationBasis b = polarization_basis(d);
                    const auto pick = [](const Vec3& v, int c) { return c == 0 ? v.x : c == 1 ? v.y : v.z; };
                    return pick(b.te, i) * pick(b.te, j) + pick(b.tm, i) * pick(b.tm, j);
                });

    t.rank3_norm = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m) {
                const double v = component([&](const Direction& d) {
                    const Vec3 k = direction_to_unit(d);
                    const PolarizationBasis b = polarization_basis(d);
                    const auto pick = [](const Vec3& v3, int c) { return c == 0 ? v3.x : c == 1 ? v3.y : v3.z; };
                    return pick(k, i) * (pick(b.te, j) * pick(b.te, m) + pick(b.tm, j) * pick(b.tm, m));
                });
                t.rank3_norm = std::max(t.rank3_norm, std::abs(v));
            }

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    t.rank4[static_cast<std::size_t>(((i * 3 + j) * 3 + m) * 3 + n)] =
                        component([&](const Direction& d) {
                            const Vec3 k = direction_to_unit(d);
                            const PolarizationBasis b = polarization_basis(d);
                            const auto pick = [](const Vec3& v3, int c) { return c == 0 ? v3.x : c == 1 ? v3.y : v3.z; };
                            return pick(k, m) * pick(k, n) *
                                   (pick(b.te, i) * pick(b.te, j) + pick(b.tm, i) * pick(b.tm, j));
                        });

    // Project onto the two isotropic rank-4 invariants:
    //   A = T_iimm = 9 C1 + 6 C2,  B = T_ijij + T_ijji = 6 C1 + 24 C2.
    double a = 0.0, b = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 3; ++m) a += t.rank4_at(i, i, m, m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b += t.rank4_at(i, j, i, j) + t.rank4_at(i, j, j, i);
    t.c1 = (24.0 * a - 6.0 * b) / 180.0;
    t.c2 = (9.0 * b - 6.0 * a) / 180.0;
    return t;
}

// Matching the closed-form angular spectrum requires the conversion factor
// 15/(8 pi) between the raw partner integral and the reduced units of
// dce_angular_spectrum (60 pi^2 prefactor vs 32 pi^3 from the golden rule).
double angular_spectrum_bruteforce(double x, double theta, Polarization pol,
                                   const QuadratureSpec& q, Exec exec) {
    check_open_interval(x, "angular_spectrum_bruteforce");
    const PhotonMode mode1(Direction(theta, 0.0), x, pol);
    const double x2 = 1.0 - x;
    const double integral = solid_angle_integrate(
        [&](const Direction& dir2) { return partner_sum(mode1, dir2, x2); }, q, exec);
    return frequency_weight(x) * (15.0 / (8.0 * pi)) * integral;
}

double frequency_spectrum_bruteforce(double x, Polarization pol, const QuadratureSpec& q,
                                     Exec exec) {
    check_open_interval(x, "frequency_spectrum_bruteforce");
    // Outer integral over the observed photon; (3/4pi) converts between the
    // 60 pi^2 angular and 45 pi frequency unit conventions.
    const double integral = solid_angle_integrate(
        [&](const Direction& dir1) { return angular_spectrum_bruteforce(x, dir1.theta, pol, q, exec); },
        q, Exec::Serial);
    return integral * 3.0 / (4.0 * pi);
}

MonteCarloEstimate monte_carlo_spectrum(double x, double theta, Polarization pol,
                                        std::int64_t n_samples, std::uint64_t seed, Exec exec) {
    check_open_interval(x, "monte_carlo_spectrum");
    if (n_samples < 1000)
        throw std::invalid_argument("monte_carlo_spectrum: need at least 1000 samples");

    const PhotonMode mode1(Direction(theta, 0.0), x, pol);
    const double x2 = 1.0 - x;
    const CounterRng rng{seed};

    // Fixed-size blocks, serial inside, serially combined in block order:
    // the result is bit-identical for every execution policy/worker count.
    constexpr std::int64_t block = 4096;
    const std::int64_t n_blocks = (n_samples + block - 1) / block;
    std::vector<double> sums(static_cast<std::size_t>(n_blocks));
    std::vector<double> sq_sums(static_cast<std::size_t>(n_blocks));

    for_each_index(exec, static_cast<std::ptrdiff_t>(n_blocks), [&](std::ptrdiff_t bi) {
        const std::int64_t begin = bi * block;
        const std::int64_t end = std::min(begin + block, n_samples);
        double s = 0.0, s2 = 0.0;
        for (std::int64_t j = begin; j < end; ++j) {
            const auto counter = static_cast<std::uint64_t>(j);
            const double cos_theta2 = 1.0 - 2.0 * rng.uniform(counter, 0);
            const double phi2 = 2.0 * pi * rng.uniform(counter, 1);
            const Direction dir2(std::acos(cos_theta2), phi2);
            const double h = partner_sum(mode1, dir2, x2);
            s += h;
            s2 += h * h;
        }
        sums[static_cast<std::size_t>(bi)] = s;
        sq_sums[static_cast<std::size_t>(bi)] = s2;
    });

    double total = 0.0, total_sq = 0.0;
    for (std::int64_t bi = 0; bi < n_blocks; ++bi) {
        total += sums[static_cast<std::size_t>(bi)];
        total_sq += sq_sums[static_cast<std::size_t>(bi)];
    }

    const double n = static_cast<double>(n_samples);
    const double mean = total / n;
    const double variance = std::max(0.0, (total_sq - n * mean * mean) / (n - 1.0));
    // estimate = weight * (15/(8 pi)) * 4 pi * mean
    const double scale = frequency_weight(x) * 15.0 / 2.0;
    return {scale * mean, scale * std::sqrt(variance / n)};
}

} // namespace vacrad
