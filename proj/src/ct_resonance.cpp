#include "resonance/ct_resonance.hpp"

#include "resonance/magnitude_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace resonance {

CtDamping ct_damping(const CtPolePair& p) {
    const double omega_n = std::hypot(p.sigma0(), p.omega0());
    const double zeta = p.sigma0() / omega_n;
    return {zeta, omega_n, 0.5 / zeta};
}

ResonanceReport analyze_ct(const CtPolePair& p, const Tolerances& tol) {
    tol.validate();
    const CtDamping d = ct_damping(p);

    ResonanceReport report;
    report.damping = d.zeta;
    report.natural_frequency = d.omega_n;
    report.quality_factor = d.q;

    // Ratio test directly; avoids the sqrt in zeta < 1/sqrt(2).
    const double ratio = p.omega0() / p.sigma0();
    if (std::abs(ratio - 1.0) <= tol.classify_eps * std::max(1.0, ratio)) {
        report.verdict = Verdict::Marginal;
        return report;
    }
    if (ratio < 1.0) {
        report.verdict = Verdict::NonResonant;
        return report;
    }

    report.verdict = Verdict::Resonant;
    // (w0 - s0)(w0 + s0) instead of w0^2 - s0^2 keeps precision near the cone.
    const double peak = std::sqrt((p.omega0() - p.sigma0()) * (p.omega0() + p.sigma0()));
    report.resonant_frequency = peak;
    report.band = Band{0.0, std::numbers::sqrt2 * peak};
    return report;
}

double magnitude_ct(const CtPolePair& p, double omega) {
    if (!(omega >= 0.0)) {
        throw Error(ErrorCode::NegativeFrequency, "frequency must be >= 0");
    }
    return detail::ct_magnitude(p.sigma0(), p.omega0(), omega);
}

BoundaryPolyline ct_region_boundary(std::size_t n_points, double sigma_max) {
    if (n_points < 2) {
        throw Error(ErrorCode::BadSampleCount, "boundary needs at least 2 points");
    }
    if (!(sigma_max > 0.0) || !std::isfinite(sigma_max)) {
        throw Error(ErrorCode::InvalidArgument, "sigma_max must be finite and > 0");
    }
    BoundaryPolyline out;
    out.upper.reserve(n_points);
    out.lower.reserve(n_points);
    for (std::size_t k = 1; k <= n_points; ++k) {
        const double sigma = sigma_max * static_cast<double>(k) / static_cast<double>(n_points);
        out.upper.emplace_back(-sigma, sigma);
        out.lower.emplace_back(-sigma, -sigma);
    }
    return out;
}

} // namespace resonance
