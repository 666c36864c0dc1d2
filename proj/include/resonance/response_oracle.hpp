#pragma once

// Brute-force resonance verifier. Everything here is decided from densely
// sampled magnitude responses; none of the closed-form classifiers, peak or
// band formulas are consulted.

#include "resonance/core.hpp"

#include <vector>

namespace resonance {

/// Relative margin an interior sample must clear to count as exceeding the reference.
inline constexpr double kOracleExceedance = 1e-12;

/// Golden-section iterations used to refine the grid argmax.
inline constexpr int kGoldenIterations = 30;

struct ResponseSamples {
    std::vector<double> freqs; ///< uniform and ascending, endpoints included
    /// |H| for continuous time, |H|^2 = 1/D for discrete time.
    std::vector<double> mags;
    std::size_t argmax_index = 0;
    /// |H(0)| (CT) or max(|H(0)|^2, |H(pi)|^2) (DT).
    double reference_level = 0.0;
    std::size_t reference_index = 0; ///< endpoint sample that sets reference_level
    double peak_frequency = 0.0;     ///< argmax after golden-section refinement
};

struct OracleResult {
    Verdict verdict = Verdict::NonResonant; ///< never Marginal
    ResponseSamples samples;
};

/// Samples |H| on [0, 4*omega_n] with n points. Throws BadSampleCount if n < 3.
OracleResult oracle_ct(const CtPolePair& p, std::size_t n);

/// Samples 1/D on [0, pi] with n points. Throws BadSampleCount if n < 3.
OracleResult oracle_dt(const DtPolePair& p, std::size_t n);

/// Linearly interpolated frequencies where the response crosses
/// reference_level. Samples within the oracle's exceedance tolerance of the
/// reference do not count as being on either side.
std::vector<double> band_crossings(const ResponseSamples& samples);

} // namespace resonance
