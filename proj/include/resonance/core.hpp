#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace resonance {

enum class ErrorCode {
    NonCausalOrUnstable,
    NotUnderdamped,
    OutsideUnitDisk,
    AngleOutOfRange,
    NegativeFrequency,
    FrequencyOutOfRange,
    BadSampleCount,
    MapSingularity,
    InvalidTolerance,
    InvalidArgument,
    IoError,
};

/// Machine-readable name, e.g. "OutsideUnitDisk". Used verbatim on the wire.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/**
 * Stable, underdamped s-plane conjugate pole pair p = -sigma0 + j*omega0.
 *
 * Only the upper-half-plane member is stored; the conjugate is implicit.
 * Construct through validate_ct().
 */
class CtPolePair {
  public:
    double sigma0() const noexcept { return sigma0_; }
    double omega0() const noexcept { return omega0_; }
    std::complex<double> pole() const noexcept { return {-sigma0_, omega0_}; }

    friend CtPolePair validate_ct(double sigma0, double omega0);
    friend bool operator==(const CtPolePair&, const CtPolePair&) = default;

  private:
    CtPolePair(double sigma0, double omega0) : sigma0_(sigma0), omega0_(omega0) {}
    double sigma0_;
    double omega0_;
};

/**
 * Stable z-plane conjugate pole pair z = a * exp(j*omega_big0) with
 * 0 < a < 1 and 0 < omega_big0 < pi. Construct through validate_dt().
 */
class DtPolePair {
  public:
    double a() const noexcept { return a_; }
    double omega_big0() const noexcept { return omega_big0_; }
    std::complex<double> pole() const noexcept { return std::polar(a_, omega_big0_); }

    friend DtPolePair validate_dt(double a, double omega_big0);
    friend bool operator==(const DtPolePair&, const DtPolePair&) = default;

  private:
    DtPolePair(double a, double omega_big0) : a_(a), omega_big0_(omega_big0) {}
    double a_;
    double omega_big0_;
};

/// Throws NonCausalOrUnstable (sigma0 <= 0) or NotUnderdamped (omega0 <= 0).
/// NaN inputs are rejected as well.
CtPolePair validate_ct(double sigma0, double omega0);

/// Throws OutsideUnitDisk (a outside (0,1)) or AngleOutOfRange (outside (0,pi)).
DtPolePair validate_dt(double a, double omega_big0);

enum class Verdict { Resonant, NonResonant, Marginal };

/// "resonant" | "non_resonant" | "marginal"
std::string_view to_string(Verdict v);

/// Open frequency interval (lo, hi).
struct Band {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Band&, const Band&) = default;
};

enum class DtBandCase { FirstFourth, SecondThird, ImaginaryAxis };

std::string_view to_string(DtBandCase c);

struct ResonanceReport {
    Verdict verdict = Verdict::NonResonant;
    /// zeta for continuous time, zeta_z for discrete time.
    double damping = 0.0;
    std::optional<double> natural_frequency; // CT only
    std::optional<double> quality_factor;    // CT only
    std::optional<double> resonant_frequency;
    std::optional<Band> band;
    std::optional<DtBandCase> band_case; // DT only, present iff band is
};

/// Region boundary for display: the upper-half-plane curve and its mirror.
struct BoundaryPolyline {
    std::vector<std::complex<double>> upper;
    std::vector<std::complex<double>> lower;
};

struct Tolerances {
    /// Marginal half-width around the classification boundary.
    double classify_eps = 1e-9;
    std::size_t oracle_grid = 100001;
    /// Analytic-vs-oracle comparison slack; unset means one oracle grid step.
    std::optional<double> match_eps;

    /// Throws InvalidTolerance unless classify_eps > 0 and oracle_grid >= 3.
    void validate() const;

    double match_slack(double grid_step) const { return match_eps.value_or(grid_step); }
};

} // namespace resonance
