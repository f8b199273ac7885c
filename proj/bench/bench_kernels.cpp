// Timing comparison between the serial reference kernels and their OpenMP
// counterparts. Both paths produce bit-identical numbers (asserted here),
// so the only difference worth measuring is wall time.

#include <chrono>
#include <cstdio>
#include <numbers>

#include "vacrad/dce.hpp"
#include "vacrad/oracle.hpp"
#include "vacrad/planar.hpp"
#include "vacrad/quadrature.hpp"
#include "vacrad/table.hpp"

using namespace vacrad;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <class F>
double time_ms(F&& f) {
    const double t0 = now_ms();
    f();
    return now_ms() - t0;
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-34s serial %9.1f ms   openmp %9.1f ms   speedup %5.2fx   %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("workers available: %d\n\n", worker_count(Exec::Parallel));

    {
        const QuadratureSpec q(128, 256, 1e-10);
        double serial_value = 0.0, parallel_value = 0.0;
        const auto integrand = [](const Direction& d) {
            return dce_angular_spectrum(0.3, d.theta, Polarization::TM) +
                   dce_angular_spectrum(0.7, d.theta, Polarization::TE);
        };
        const double s = time_ms([&] { serial_value = solid_angle_integrate_fixed(integrand, q, Exec::Serial); });
        const double p = time_ms([&] { parallel_value = solid_angle_integrate_fixed(integrand, q, Exec::Parallel); });
        report("solid-angle quadrature 128x256", s, p, serial_value == parallel_value);
    }
    {
        const QuadratureSpec q(32, 64, 1e-10);
        double serial_value = 0.0, parallel_value = 0.0;
        const double s = time_ms([&] {
            serial_value = angular_spectrum_bruteforce(0.5, 1.0, Polarization::TM, q, Exec::Serial);
        });
        const double p = time_ms([&] {
            parallel_value = angular_spectrum_bruteforce(0.5, 1.0, Polarization::TM, q, Exec::Parallel);
        });
        report("partner-integration oracle 32x64", s, p, serial_value == parallel_value);
    }
    {
        constexpr std::int64_t n = 8'000'000;
        MonteCarloEstimate serial_mc{}, parallel_mc{};
        const double s = time_ms([&] {
            serial_mc = monte_carlo_spectrum(0.5, 0.0, Polarization::TE, n, 42, Exec::Serial);
        });
        const double p = time_ms([&] {
            parallel_mc = monte_carlo_spectrum(0.5, 0.0, Polarization::TE, n, 42, Exec::Parallel);
        });
        report("monte carlo 8e6 samples", s, p,
               serial_mc.estimate == parallel_mc.estimate &&
                   serial_mc.std_error == parallel_mc.std_error);
    }
    {
        const auto grid = linspace(0.0, std::numbers::pi / 2.0, 2'000'000);
        std::vector<double> serial_vals, parallel_vals;
        const auto f = [](double theta) {
            return planar_angular_spectrum(0.7, theta, Polarization::TM);
        };
        const double s = time_ms([&] { serial_vals = map_grid(grid, f, Exec::Serial); });
        const double p = time_ms([&] { parallel_vals = map_grid(grid, f, Exec::Parallel); });
        report("planar shape sweep 2e6 points", s, p, serial_vals == parallel_vals);
    }
    return 0;
}
