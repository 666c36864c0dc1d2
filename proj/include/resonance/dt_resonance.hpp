#pragma once

#include "resonance/core.hpp"

#include <optional>

namespace resonance {

/// |zeta_z| below this is treated as a pole pair on the imaginary axis.
inline constexpr double kImaginaryAxisEps = 1e-12;

/// Frequency band on which |H| exceeds max(|H(0)|, |H(pi)|).
struct DtBand {
    double lo = 0.0;
    double hi = 0.0;
    DtBandCase quadrant_case = DtBandCase::ImaginaryAxis;
};

/// Discrete-time damping coefficient ((1 + a^2) / a) * cos(omega0).
/// Its sign tells which side of the imaginary axis the poles sit on.
double zeta_z(const DtPolePair& p);

/**
 * Inner edge of the z-plane resonance region at pole angle omega0:
 * (1 - |sin w0|) / |cos w0|, evaluated as |cos w0| / (1 + |sin w0|).
 *
 * Exactly 0 at w0 = pi/2. Throws AngleOutOfRange outside (0, pi).
 */
double boundary_radius(double omega_big0);

/// Band from the sign of zeta_z. nullopt when |zeta_z| >= 2 (no band exists).
std::optional<DtBand> dt_band(const DtPolePair& p);

/**
 * Resonant iff |zeta_z| < 2 (equivalently a > boundary_radius(w0)).
 * Marginal when ||zeta_z| - 2| <= classify_eps. The peak is at
 * arccos(zeta_z / 2).
 */
ResonanceReport analyze_dt(const DtPolePair& p, const Tolerances& tol = {});

/// |H(e^{jw})|^2 = 1 / D(w). Throws FrequencyOutOfRange outside [0, pi].
double magnitude_sq_dt(const DtPolePair& p, double omega);

/**
 * Boundary curve r(w0) * e^{j w0} on the closed grid w0_k = k*pi/(n-1).
 * The two grid ends carry the limit radius 1 so the curve meets the unit
 * circle at z = +1 and z = -1; odd n puts the origin at the midpoint.
 * Throws BadSampleCount if n_points < 3.
 */
BoundaryPolyline dt_region_boundary(std::size_t n_points);

} // namespace resonance
