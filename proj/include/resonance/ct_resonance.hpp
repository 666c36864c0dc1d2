#pragma once

#include "resonance/core.hpp"

namespace resonance {

/// Damping quantities of a continuous-time pole pair.
struct CtDamping {
    double zeta = 0.0;    ///< sigma0 / omega_n, in (0, 1)
    double omega_n = 0.0; ///< natural frequency [rad/s]
    double q = 0.0;       ///< quality factor 1/(2 zeta)
};

CtDamping ct_damping(const CtPolePair& p);

/**
 * Classify resonance of H(s) = 1/((s-p)(s-p*)).
 *
 * Resonant iff omega0/sigma0 > 1, i.e. the pole lies inside the +/-45 degree
 * cone around the negative real axis. Marginal when
 * |omega0/sigma0 - 1| <= classify_eps * max(1, omega0/sigma0).
 * When resonant, the peak sits at sqrt(omega0^2 - sigma0^2) and
 * |H(w)| > |H(0)| on (0, sqrt(2) * peak).
 */
ResonanceReport analyze_ct(const CtPolePair& p, const Tolerances& tol = {});

/// |H(j*omega)|. Throws NegativeFrequency for omega < 0.
double magnitude_ct(const CtPolePair& p, double omega);

/**
 * Boundary rays s = sigma*(-1 +/- j) of the resonance cone, sampled at
 * sigma_k = sigma_max * k / n_points for k = 1..n_points.
 * Throws BadSampleCount if n_points < 2.
 */
BoundaryPolyline ct_region_boundary(std::size_t n_points, double sigma_max = 1.0);

} // namespace resonance
