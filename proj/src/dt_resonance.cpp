#include "resonance/dt_resonance.hpp"

#include "resonance/magnitude_kernels.hpp"

#include <cmath>
#include <numbers>

namespace resonance {

using std::numbers::pi;

double zeta_z(const DtPolePair& p) {
    const double a = p.a();
    return (1.0 + a * a) / a * std::cos(p.omega_big0());
}

double boundary_radius(double omega_big0) {
    if (!(omega_big0 > 0.0 && omega_big0 < pi)) {
        throw Error(ErrorCode::AngleOutOfRange, "boundary angle must satisfy 0 < omega0 < pi");
    }
    if (omega_big0 == pi / 2) {
        return 0.0;
    }
    return std::abs(std::cos(omega_big0)) / (1.0 + std::abs(std::sin(omega_big0)));
}

std::optional<DtBand> dt_band(const DtPolePair& p) {
    const double z = zeta_z(p);
    if (!(std::abs(z) < 2.0)) {
        return std::nullopt;
    }
    if (std::abs(z) < kImaginaryAxisEps) {
        return DtBand{0.0, pi, DtBandCase::ImaginaryAxis};
    }
    if (z > 0.0) {
        return DtBand{0.0, std::acos(z - 1.0), DtBandCase::FirstFourth};
    }
    return DtBand{std::acos(z + 1.0), pi, DtBandCase::SecondThird};
}

ResonanceReport analyze_dt(const DtPolePair& p, const Tolerances& tol) {
    tol.validate();
    ResonanceReport report;
    const double z = zeta_z(p);
    report.damping = z;

    const double margin = std::abs(z) - 2.0;
    if (std::abs(margin) <= tol.classify_eps) {
        report.verdict = Verdict::Marginal;
        return report;
    }
    if (margin > 0.0) {
        report.verdict = Verdict::NonResonant;
        return report;
    }

    report.verdict = Verdict::Resonant;
    report.resonant_frequency = std::acos(z / 2.0);
    const DtBand band = *dt_band(p);
    report.band = Band{band.lo, band.hi};
    report.band_case = band.quadrant_case;
    return report;
}

double magnitude_sq_dt(const DtPolePair& p, double omega) {
    if (!(omega >= 0.0 && omega <= pi)) {
        throw Error(ErrorCode::FrequencyOutOfRange, "frequency must lie in [0, pi]");
    }
    return 1.0 / detail::dt_denominator(p.a(), p.omega_big0(), omega);
}

BoundaryPolyline dt_region_boundary(std::size_t n_points) {
    if (n_points < 3) {
        throw Error(ErrorCode::BadSampleCount, "boundary needs at least 3 points");
    }
    BoundaryPolyline out;
    out.upper.reserve(n_points);
    out.lower.reserve(n_points);
    const std::size_t last = n_points - 1;
    for (std::size_t k = 0; k < n_points; ++k) {
        std::complex<double> z;
        if (k == 0) {
            z = 1.0;
        } else if (k == last) {
            z = -1.0;
        } else if (2 * k == last) {
            z = 0.0;
        } else {
            const double w0 = pi * static_cast<double>(k) / static_cast<double>(last);
            z = std::polar(boundary_radius(w0), w0);
        }
        out.upper.push_back(z);
        out.lower.push_back(std::conj(z));
    }
    return out;
}

} // namespace resonance
