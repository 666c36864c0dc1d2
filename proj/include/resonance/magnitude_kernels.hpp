#pragma once

// Raw frequency-response formulas, templated on the floating type so the
// oracle can refine peaks in extended precision. No validation here.

#include <cmath>

namespace resonance::detail {

// |H(w)| for H(s) = 1/((s-p)(s-p*)), p = -sigma0 + j*omega0.
template <typename T>
T ct_magnitude(T sigma0, T omega0, T omega) {
    const T s2 = sigma0 * sigma0;
    const T lo = omega - omega0;
    const T hi = omega + omega0;
    return T(1) / std::sqrt((s2 + lo * lo) * (s2 + hi * hi));
}

// Squared distance from exp(j*w) to a*exp(j*theta), written as
// (1-a)^2 + 4a sin^2((w-theta)/2) so that it stays accurate near the pole.
template <typename T>
T dt_pole_distance_sq(T a, T theta, T omega) {
    const T one_minus = T(1) - a;
    const T s = std::sin((omega - theta) / T(2));
    return one_minus * one_minus + T(4) * a * s * s;
}

// D(w) = (1+a^2)^2 - 4a(1+a^2) cos w cos w0 + 4a^2 (cos^2 w - sin^2 w0),
// evaluated as the product of squared distances to the two conjugate poles.
template <typename T>
T dt_denominator(T a, T omega_big0, T omega) {
    return dt_pole_distance_sq(a, omega_big0, omega) * dt_pole_distance_sq(a, -omega_big0, omega);
}

} // namespace resonance::detail
