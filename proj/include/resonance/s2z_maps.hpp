#pragma once

#include "resonance/core.hpp"

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace resonance {

enum class MappingMethod { ImpulseInvariance, BackwardDifference, Bilinear };

inline constexpr MappingMethod kAllMappingMethods[] = {
    MappingMethod::ImpulseInvariance, MappingMethod::BackwardDifference, MappingMethod::Bilinear};

/// "impulse" | "backward" | "bilinear"
std::string_view to_string(MappingMethod m);
std::optional<MappingMethod> parse_mapping_method(std::string_view name);

/// z = e^{sT}, 1/(1 - sT) or (1 + sT/2)/(1 - sT/2).
/// Throws MapSingularity on a vanishing denominator, InvalidArgument if t_sample <= 0.
std::complex<double> map_point(MappingMethod method, std::complex<double> s, double t_sample);

/// Image of the cone ray s = t(-1 + j) with T = 1; params hold t = sigma*T.
struct MappedCurve {
    MappingMethod method = MappingMethod::Bilinear;
    std::vector<double> params;
    std::vector<std::complex<double>> points;
};

/// pi for impulse invariance (the angle wraps past pi), 20 otherwise.
double default_t_max(MappingMethod method);

/// Samples t_k = t_max * k / n_points, k = 1..n_points. Throws BadSampleCount if n_points < 2.
MappedCurve boundary_curve(MappingMethod method, std::size_t n_points, double t_max);
MappedCurve boundary_curve(MappingMethod method, std::size_t n_points);

/**
 * Radius of the mapped boundary at pole angle omega0, or nullopt where the
 * curve never reaches that angle (backward difference beyond pi/4).
 * Impulse invariance uses the closed form e^{-omega0}; the other two invert
 * the monotone angle by bisection on t.
 */
std::optional<double> mapped_radius_at_angle(MappingMethod method, double omega_big0);

/// True iff the pole lies between the mapped boundary and the unit circle.
bool region_membership(MappingMethod method, const DtPolePair& p);

struct RegionComparison {
    MappingMethod method = MappingMethod::Bilinear;
    std::size_t radial = 0;
    std::size_t angular = 0;
    std::size_t evaluated = 0; ///< grid poles with a non-marginal exact verdict
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    double false_positive_rate = 0.0;
    double false_negative_rate = 0.0;
};

/**
 * Compare the mapped region with the exact one on the grid
 * a_i = i/(radial+1), w0_j = j*pi/(angular+1), i, j >= 1.
 * Marginal exact verdicts are left out of both counts and the denominator.
 * Throws BadSampleCount if radial or angular < 2.
 */
RegionComparison compare_regions(MappingMethod method, std::size_t radial, std::size_t angular,
                                 const Tolerances& tol = {});

} // namespace resonance
