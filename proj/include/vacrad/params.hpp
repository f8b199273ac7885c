#ifndef VACRAD_PARAMS_HPP
#define VACRAD_PARAMS_HPP

#include <stdexcept>
#include <vector>

namespace vacrad {

/// Dimensionless inputs of the one-photon problem.
///
/// rho  = omega_cm / omega_0   (mechanical over transition frequency)
/// beta = v_m / c              (peak velocity over light speed)
///
/// The oscillation amplitude never appears on its own: v_m = omega_cm * a,
/// so the two ratios carry everything.
struct ReducedMieParams {
    double rho;
    double beta;

    ReducedMieParams(double rho_, double beta_) : rho(rho_), beta(beta_) {
        if (!(rho > 0.0))
            throw std::invalid_argument("ReducedMieParams: rho must be > 0");
        if (!(beta >= 0.0))
            throw std::invalid_argument("ReducedMieParams: beta must be >= 0");
        if (beta >= 1.0)
            throw std::invalid_argument("ReducedMieParams: beta must be < 1 (non-relativistic motion)");
    }
};

/// One internal transition of a multi-level atom, in rate/dipole units of the
/// caller's choosing (they only need to be mutually consistent,
/// gamma ~ dipole_sq * omega^3 with one shared constant across the list).
///
/// omega_ratio = omega_s / omega_cm.
struct TransitionSpec {
    double omega_ratio;
    double gamma_s;
    double dipole_sq;

    TransitionSpec(double omega_ratio_, double gamma_s_, double dipole_sq_)
        : omega_ratio(omega_ratio_), gamma_s(gamma_s_), dipole_sq(dipole_sq_) {
        if (!(omega_ratio > 0.0))
            throw std::invalid_argument("TransitionSpec: omega_ratio must be > 0");
        if (!(gamma_s >= 0.0))
            throw std::invalid_argument("TransitionSpec: gamma_s must be >= 0");
        if (!(dipole_sq >= 0.0))
            throw std::invalid_argument("TransitionSpec: dipole_sq must be >= 0");
    }
};

using TransitionList = std::vector<TransitionSpec>;

} // namespace vacrad

#endif
