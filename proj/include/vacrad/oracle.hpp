#ifndef VACRAD_ORACLE_HPP
#define VACRAD_ORACLE_HPP

#include <array>
#include <cstdint>

#include "vacrad/dce.hpp"
#include "vacrad/quadrature.hpp"

namespace vacrad {

/// Direction-averaged, polarization-summed tensors of the transverse basis,
/// computed numerically. For an isotropic distribution:
///   rank2      -> (2/3) delta_ij
///   rank3      -> 0 (no symmetric isotropic rank-3 tensor)
///   rank4_ijmn -> C1 delta_ij delta_mn + C2 (delta_im delta_jn + delta_in delta_jm)
/// with C1 = 4/15, C2 = -1/15. Index order of rank4: avg of k_m k_n e_i e_j.
struct TensorAverages {
    std::array<std::array<double, 3>, 3> rank2;
    double rank3_norm;
    std::array<double, 81> rank4; // [((i*3+j)*3+m)*3+n]
    double c1;
    double c2;

    double rank4_at(int i, int j, int m, int n) const {
        return rank4[static_cast<std::size_t>(((i * 3 + j) * 3 + m) * 3 + n)];
    }
};

TensorAverages polarization_tensor_averages(const QuadratureSpec& q, Exec exec = Exec::Serial);

/// Angular pair spectrum computed the hard way: the partner photon is
/// integrated over the sphere and summed over polarizations, with the
/// stationary-limit partner frequency 1-x. Same reduced units as
/// dce_angular_spectrum, which it must reproduce.
double angular_spectrum_bruteforce(double x, double theta, Polarization pol,
                                   const QuadratureSpec& q, Exec exec = Exec::Serial);

/// Solid-angle quadrature of angular_spectrum_bruteforce, in the reduced
/// units of dce_frequency_spectrum.
double frequency_spectrum_bruteforce(double x, Polarization pol, const QuadratureSpec& q,
                                     Exec exec = Exec::Serial);

struct MonteCarloEstimate {
    double estimate;
    double std_error;
};

/// Monte Carlo alternative to angular_spectrum_bruteforce: uniform-sphere
/// sampling of the partner direction with a counter-based generator, so a
/// given (seed, n_samples) is bit-reproducible for any worker count.
MonteCarloEstimate monte_carlo_spectrum(double x, double theta, Polarization pol,
                                        std::int64_t n_samples, std::uint64_t seed,
                                        Exec exec = Exec::Serial);

} // namespace vacrad

#endif
