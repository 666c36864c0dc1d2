#include "resonance/s2z_maps.hpp"

#include "resonance/dt_resonance.hpp"

#include <cmath>
#include <numbers>

namespace resonance {

using std::numbers::pi;

std::string_view to_string(MappingMethod m) {
    switch (m) {
    case MappingMethod::ImpulseInvariance: return "impulse";
    case MappingMethod::BackwardDifference: return "backward";
    case MappingMethod::Bilinear: return "bilinear";
    }
    return "unknown";
}

std::optional<MappingMethod> parse_mapping_method(std::string_view name) {
    for (MappingMethod m : kAllMappingMethods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::complex<double> map_point(MappingMethod method, std::complex<double> s, double t_sample) {
    if (!(t_sample > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "sampling period must be > 0");
    }
    const std::complex<double> st = s * t_sample;
    switch (method) {
    case MappingMethod::ImpulseInvariance:
        return std::exp(st);
    case MappingMethod::BackwardDifference: {
        const std::complex<double> den = 1.0 - st;
        if (den == 0.0) {
            throw Error(ErrorCode::MapSingularity, "backward difference pole at sT = 1");
        }
        return 1.0 / den;
    }
    case MappingMethod::Bilinear: {
        const std::complex<double> den = 1.0 - 0.5 * st;
        if (den == 0.0) {
            throw Error(ErrorCode::MapSingularity, "bilinear pole at sT = 2");
        }
        return (1.0 + 0.5 * st) / den;
    }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown mapping method");
}

double default_t_max(MappingMethod method) {
    return method == MappingMethod::ImpulseInvariance ? pi : 20.0;
}

namespace {

std::complex<double> ray_image(MappingMethod method, double t) {
    return map_point(method, {-t, t}, 1.0);
}

// Bisection on the ray parameter for angle(z(t)) = target. The angle is
// strictly increasing in t for both methods that reach here.
double radius_by_inversion(MappingMethod method, double target) {
    double lo = 0.0;
    double hi = 1.0;
    while (std::arg(ray_image(method, hi)) < target && hi < 1e300) {
        lo = hi;
        hi *= 2.0;
    }
    // Run until the bracket collapses to adjacent doubles.
    for (int i = 0; i < 2100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (std::arg(ray_image(method, mid)) < target ? lo : hi) = mid;
    }
    return std::abs(ray_image(method, 0.5 * (lo + hi)));
}

} // namespace

MappedCurve boundary_curve(MappingMethod method, std::size_t n_points, double t_max) {
    if (n_points < 2) {
        throw Error(ErrorCode::BadSampleCount, "mapped curve needs at least 2 points");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw Error(ErrorCode::InvalidArgument, "t_max must be finite and > 0");
    }
    MappedCurve curve;
    curve.method = method;
    curve.params.reserve(n_points);
    curve.points.reserve(n_points);
    for (std::size_t k = 1; k <= n_points; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(n_points);
        curve.params.push_back(t);
        curve.points.push_back(ray_image(method, t));
    }
    return curve;
}

MappedCurve boundary_curve(MappingMethod method, std::size_t n_points) {
    return boundary_curve(method, n_points, default_t_max(method));
}

std::optional<double> mapped_radius_at_angle(MappingMethod method, double omega_big0) {
    if (!(omega_big0 > 0.0 && omega_big0 < pi)) {
        throw Error(ErrorCode::AngleOutOfRange, "angle must satisfy 0 < omega0 < pi");
    }
    switch (method) {
    case MappingMethod::ImpulseInvariance:
        return std::exp(-omega_big0);
    case MappingMethod::BackwardDifference:
        // angle = atan(t / (1 + t)) < pi/4 for every finite t
        if (omega_big0 >= pi / 4) {
            return std::nullopt;
        }
        return radius_by_inversion(method, omega_big0);
    case MappingMethod::Bilinear:
        return radius_by_inversion(method, omega_big0);
    }
    return std::nullopt;
}

bool region_membership(MappingMethod method, const DtPolePair& p) {
    const std::optional<double> r = mapped_radius_at_angle(method, p.omega_big0());
    return r && p.a() > *r;
}

RegionComparison compare_regions(MappingMethod method, std::size_t radial, std::size_t angular,
                                 const Tolerances& tol) {
    if (radial < 2 || angular < 2) {
        throw Error(ErrorCode::BadSampleCount, "comparison grid needs at least 2x2 points");
    }
    RegionComparison out;
    out.method = method;
    out.radial = radial;
    out.angular = angular;

    for (std::size_t j = 1; j <= angular; ++j) {
        const double w0 = pi * static_cast<double>(j) / static_cast<double>(angular + 1);
        const std::optional<double> mapped = mapped_radius_at_angle(method, w0);
        for (std::size_t i = 1; i <= radial; ++i) {
            const double a = static_cast<double>(i) / static_cast<double>(radial + 1);
            const Verdict exact = analyze_dt(validate_dt(a, w0), tol).verdict;
            if (exact == Verdict::Marginal) {
                continue;
            }
            ++out.evaluated;
            const bool inside = mapped && a > *mapped;
            const bool resonant = exact == Verdict::Resonant;
            if (inside && !resonant) {
                ++out.false_positives;
            } else if (!inside && resonant) {
                ++out.false_negatives;
            }
        }
    }
    if (out.evaluated > 0) {
        const auto n = static_cast<double>(out.evaluated);
        out.false_positive_rate = static_cast<double>(out.false_positives) / n;
        out.false_negative_rate = static_cast<double>(out.false_negatives) / n;
    }
    return out;
}

} // namespace resonance
