#include "resonance/core.hpp"

#include <cmath>
#include <numbers>

namespace resonance {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonCausalOrUnstable: return "NonCausalOrUnstable";
    case ErrorCode::NotUnderdamped: return "NotUnderdamped";
    case ErrorCode::OutsideUnitDisk: return "OutsideUnitDisk";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::NegativeFrequency: return "NegativeFrequency";
    case ErrorCode::FrequencyOutOfRange: return "FrequencyOutOfRange";
    case ErrorCode::BadSampleCount: return "BadSampleCount";
    case ErrorCode::MapSingularity: return "MapSingularity";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Resonant: return "resonant";
    case Verdict::NonResonant: return "non_resonant";
    case Verdict::Marginal: return "marginal";
    }
    return "unknown";
}

std::string_view to_string(DtBandCase c) {
    switch (c) {
    case DtBandCase::FirstFourth: return "first_fourth";
    case DtBandCase::SecondThird: return "second_third";
    case DtBandCase::ImaginaryAxis: return "imaginary_axis";
    }
    return "unknown";
}

// Comparisons are written so that NaN falls into the rejecting branch.
CtPolePair validate_ct(double sigma0, double omega0) {
    if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
        throw Error(ErrorCode::NonCausalOrUnstable,
                    "sigma0 must be finite and > 0 (pole strictly in the left half-plane)");
    }
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw Error(ErrorCode::NotUnderdamped,
                    "omega0 must be finite and > 0 (strictly complex pole pair)");
    }
    return CtPolePair(sigma0, omega0);
}

DtPolePair validate_dt(double a, double omega_big0) {
    if (!(a > 0.0 && a < 1.0)) {
        throw Error(ErrorCode::OutsideUnitDisk, "pole magnitude must satisfy 0 < a < 1");
    }
    if (!(omega_big0 > 0.0 && omega_big0 < std::numbers::pi)) {
        throw Error(ErrorCode::AngleOutOfRange, "pole angle must satisfy 0 < omega0 < pi");
    }
    return DtPolePair(a, omega_big0);
}

void Tolerances::validate() const {
    if (!(classify_eps > 0.0)) {
        throw Error(ErrorCode::InvalidTolerance, "classify_eps must be > 0");
    }
    if (oracle_grid < 3) {
        throw Error(ErrorCode::InvalidTolerance, "oracle_grid must be >= 3");
    }
    if (match_eps && !(*match_eps >= 0.0)) {
        throw Error(ErrorCode::InvalidTolerance, "match_eps must be >= 0");
    }
}

} // namespace resonance
