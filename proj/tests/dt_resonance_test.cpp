#include "resonance/dt_resonance.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

namespace resonance {
namespace {

using std::numbers::pi;

// |H(e^{jw})|^2 straight from the factored transfer function.
double direct_magnitude_sq(double a, double w0, double w) {
    const std::complex<double> zinv = std::polar(1.0, -w);
    const std::complex<double> p1 = std::polar(a, w0);
    const std::complex<double> h = 1.0 / ((1.0 - p1 * zinv) * (1.0 - std::conj(p1) * zinv));
    return std::norm(h);
}

// D(w) exactly as written in expanded form.
double expanded_denominator(double a, double w0, double w) {
    const double s = 1.0 + a * a;
    const double sw0 = std::sin(w0);
    return s * s - 4.0 * a * s * std::cos(w) * std::cos(w0) + 4.0 * a * a * (std::cos(w) * std::cos(w) - sw0 * sw0);
}

TEST(ZetaZ, KnownValues) {
    EXPECT_NEAR(zeta_z(validate_dt(0.9, pi / 2)), 0.0, 1e-15);
    EXPECT_NEAR(zeta_z(validate_dt(0.5, pi / 4)), 1.767766952966368811, 1e-15);
    EXPECT_NEAR(zeta_z(validate_dt(0.5, 3 * pi / 4)), -1.767766952966368811, 1e-15);
}

TEST(ZetaZ, SignFollowsHalfPlane) {
    auto rng = testing::make_rng(21);
    for (int i = 0; i < 10000; ++i) {
        const double a = testing::open_uniform(rng, 0.0, 1.0);
        const double w0 = testing::open_uniform(rng, 0.0, pi);
        const double z = zeta_z(validate_dt(a, w0));
        EXPECT_EQ(z > 0.0, std::cos(w0) > 0.0);
    }
}

TEST(BoundaryRadius, KnownValuesAndLimits) {
    EXPECT_NEAR(boundary_radius(pi / 4), 0.4142135623730950488, 1e-15);
    EXPECT_EQ(boundary_radius(pi / 2), 0.0);
    EXPECT_NEAR(boundary_radius(1e-9), 1.0, 1e-8);
    EXPECT_NEAR(boundary_radius(pi - 1e-9), 1.0, 1e-8);
    EXPECT_THROW(boundary_radius(0.0), Error);
    EXPECT_THROW(boundary_radius(pi), Error);
}

TEST(BoundaryRadius, MatchesDirectFormAndStaysInUnitInterval) {
    for (int k = 1; k < 1000; ++k) {
        const double w0 = pi * k / 1000.0;
        const double r = boundary_radius(w0);
        EXPECT_GE(r, 0.0);
        EXPECT_LE(r, 1.0);
        if (std::abs(w0 - pi / 2) > 0.1) {
            const double direct = (1.0 - std::abs(std::sin(w0))) / std::abs(std::cos(w0));
            EXPECT_NEAR(r, direct, 1e-14);
        }
        EXPECT_NEAR(r, boundary_radius(pi - w0), 1e-12);
    }
}

// The two roots of a^2 - 2a/|cos w0| + 1 multiply to 1.
TEST(BoundaryRadius, QuadraticRootProductIsOne) {
    auto rng = testing::make_rng(22);
    for (int i = 0; i < 10000; ++i) {
        const double w0 = testing::open_uniform(rng, 0.0, pi);
        if (std::abs(std::cos(w0)) < 1e-3) continue;
        const double c = std::abs(std::cos(w0));
        const double s = std::abs(std::sin(w0));
        const double outer = (1.0 + s) / c;
        EXPECT_NEAR(boundary_radius(w0) * outer, 1.0, 1e-12);
    }
}

TEST(AnalyzeDt, ImaginaryAxisPole) {
    const ResonanceReport r = analyze_dt(validate_dt(0.9, pi / 2));
    ASSERT_EQ(r.verdict, Verdict::Resonant);
    EXPECT_NEAR(*r.resonant_frequency, pi / 2, 1e-15);
    EXPECT_EQ(r.band->lo, 0.0);
    EXPECT_EQ(r.band->hi, pi);
    EXPECT_EQ(*r.band_case, DtBandCase::ImaginaryAxis);
}

TEST(AnalyzeDt, FirstQuadrantResonantPole) {
    // mpmath, 50 digits
    const ResonanceReport r = analyze_dt(validate_dt(0.5, pi / 4));
    ASSERT_EQ(r.verdict, Verdict::Resonant);
    EXPECT_NEAR(r.damping, 1.767766952966368811, 1e-15);
    EXPECT_NEAR(*r.resonant_frequency, 0.48669495507477320246, 1e-14);
    EXPECT_EQ(r.band->lo, 0.0);
    EXPECT_NEAR(r.band->hi, 0.69544765520957664854, 1e-14);
    EXPECT_EQ(*r.band_case, DtBandCase::FirstFourth);
}

TEST(AnalyzeDt, SecondQuadrantResonantPole) {
    const ResonanceReport r = analyze_dt(validate_dt(0.5, 3 * pi / 4));
    ASSERT_EQ(r.verdict, Verdict::Resonant);
    EXPECT_NEAR(*r.resonant_frequency, 2.654897698515020036, 1e-14);
    EXPECT_NEAR(r.band->lo, 2.4461449983802165899, 1e-14);
    EXPECT_EQ(r.band->hi, pi);
    EXPECT_EQ(*r.band_case, DtBandCase::SecondThird);
}

TEST(AnalyzeDt, PoleInsideBoundaryIsNotResonant) {
    const ResonanceReport r = analyze_dt(validate_dt(0.3, pi / 4));
    EXPECT_EQ(r.verdict, Verdict::NonResonant);
    EXPECT_NEAR(r.damping, 2.569154638311122672, 1e-14);
    EXPECT_FALSE(r.resonant_frequency);
    EXPECT_FALSE(r.band);
    EXPECT_FALSE(r.band_case);
}

TEST(AnalyzeDt, MarginalNearCriticalDamping) {
    const double r0 = boundary_radius(pi / 4);
    EXPECT_EQ(analyze_dt(validate_dt(r0, pi / 4)).verdict, Verdict::Marginal);
    Tolerances loose;
    loose.classify_eps = 0.01;
    EXPECT_EQ(analyze_dt(validate_dt(r0 + 1e-3, pi / 4), loose).verdict, Verdict::Marginal);
    EXPECT_EQ(analyze_dt(validate_dt(r0 + 1e-3, pi / 4)).verdict, Verdict::Resonant);
}

TEST(AnalyzeDt, ZetaTestAgreesWithRadiusTest) {
    auto rng = testing::make_rng(23);
    for (int i = 0; i < 50000; ++i) {
        const DtPolePair p = validate_dt(testing::open_uniform(rng, 0.0, 1.0), testing::open_uniform(rng, 0.0, pi));
        const ResonanceReport r = analyze_dt(p);
        if (r.verdict == Verdict::Marginal) continue;
        EXPECT_EQ(r.verdict == Verdict::Resonant, p.a() > boundary_radius(p.omega_big0()))
            << "a=" << p.a() << " w0=" << p.omega_big0();
    }
}

TEST(AnalyzeDt, MirrorSymmetry) {
    auto rng = testing::make_rng(24);
    for (int i = 0; i < 5000; ++i) {
        const double a = testing::open_uniform(rng, 0.0, 1.0);
        const double w0 = testing::open_uniform(rng, 0.0, pi);
        const ResonanceReport r = analyze_dt(validate_dt(a, w0));
        const ResonanceReport m = analyze_dt(validate_dt(a, pi - w0));
        if (r.verdict == Verdict::Marginal || m.verdict == Verdict::Marginal) continue;
        ASSERT_EQ(r.verdict, m.verdict);
        if (r.verdict != Verdict::Resonant) continue;
        EXPECT_NEAR(*r.resonant_frequency + *m.resonant_frequency, pi, 1e-9);
        if (*r.band_case != DtBandCase::ImaginaryAxis) {
            EXPECT_NEAR(m.band->lo, pi - r.band->hi, 1e-7);
            EXPECT_NEAR(m.band->hi, pi - r.band->lo, 1e-12);
        }
    }
}

TEST(AnalyzeDt, BandMatchesSampledDenominator) {
    auto rng = testing::make_rng(25);
    const int n = 4000;
    const double step = pi / n;
    for (int i = 0; i < 200; ++i) {
        const DtPolePair p = validate_dt(testing::open_uniform(rng, 0.0, 1.0), testing::open_uniform(rng, 0.0, pi));
        const ResonanceReport r = analyze_dt(p);
        if (r.verdict != Verdict::Resonant) continue;
        const double ref = std::max(magnitude_sq_dt(p, 0.0), magnitude_sq_dt(p, pi));
        const double peak = magnitude_sq_dt(p, *r.resonant_frequency);
        for (int k = 1; k < n; ++k) {
            const double w = step * k;
            const double h = magnitude_sq_dt(p, w);
            EXPECT_GE(peak, h * (1.0 - 1e-14));
            const bool inside = w > r.band->lo + step && w < r.band->hi - step;
            const bool outside = w < r.band->lo - step || w > r.band->hi + step;
            if (inside) EXPECT_GT(h, ref);
            if (outside) EXPECT_LT(h, ref);
        }
    }
}

TEST(MagnitudeSqDt, KnownValues) {
    const DtPolePair p = validate_dt(0.5, pi / 2);
    EXPECT_NEAR(magnitude_sq_dt(p, 0.0), 0.64, 1e-15);
    EXPECT_NEAR(magnitude_sq_dt(p, pi), 0.64, 1e-15);
    EXPECT_NEAR(1.0 / expanded_denominator(0.5, pi / 2, 0.0), 0.64, 1e-15);
    EXPECT_THROW(magnitude_sq_dt(p, -0.1), Error);
    EXPECT_THROW(magnitude_sq_dt(p, pi + 1e-9), Error);
}

TEST(MagnitudeSqDt, AgreesWithTransferFunctionAndExpandedForm) {
    auto rng = testing::make_rng(26);
    for (int i = 0; i < 20000; ++i) {
        const double a = testing::open_uniform(rng, 0.0, 1.0);
        const double w0 = testing::open_uniform(rng, 0.0, pi);
        const double w = testing::open_uniform(rng, 0.0, pi);
        const double got = magnitude_sq_dt(validate_dt(a, w0), w);
        EXPECT_NEAR(got / direct_magnitude_sq(a, w0, w), 1.0, 1e-12);
        // the expanded form loses digits when D is small; scale the slack accordingly
        const double d = expanded_denominator(a, w0, w);
        EXPECT_NEAR(got * d, 1.0, 1e-13 * (1.0 + 16.0 / d));
    }
}

TEST(MagnitudeSqDt, VerdictIgnoresGain) {
    // a positive gain multiplies every sample; the interior-vs-edge comparison is unchanged
    const DtPolePair p = validate_dt(0.5, pi / 4);
    for (double g : {1e-3, 1.0, 7.5, 1e4}) {
        const double edge = g * std::max(magnitude_sq_dt(p, 0.0), magnitude_sq_dt(p, pi));
        const double peak = g * magnitude_sq_dt(p, *analyze_dt(p).resonant_frequency);
        EXPECT_GT(peak, edge);
    }
}

TEST(DtRegionBoundary, ShapeAndKeyPoints) {
    const BoundaryPolyline b = dt_region_boundary(721);
    ASSERT_EQ(b.upper.size(), 721u);
    EXPECT_NEAR(std::abs(b.upper[180]), std::numbers::sqrt2 - 1.0, 1e-15);
    EXPECT_EQ(b.upper[360], std::complex<double>(0.0, 0.0));
    EXPECT_EQ(b.upper.front(), std::complex<double>(1.0, 0.0));
    EXPECT_EQ(b.upper.back(), std::complex<double>(-1.0, 0.0));
    for (std::size_t k = 0; k < b.upper.size(); ++k) {
        EXPECT_EQ(b.lower[k], std::conj(b.upper[k]));
        const auto mirror = b.upper[b.upper.size() - 1 - k];
        EXPECT_NEAR(std::abs(b.upper[k]), std::abs(mirror), 1e-12);
        EXPECT_LE(std::abs(b.upper[k]), 1.0);
    }
    EXPECT_THROW(dt_region_boundary(2), Error);
}

} // namespace
} // namespace resonance
