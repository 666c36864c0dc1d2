#include "resonance/core.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numbers>

namespace resonance {
namespace {

using std::numbers::pi;

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected resonance::Error";
    return ErrorCode::IoError;
}

TEST(ValidateCt, AcceptsStableUnderdampedPair) {
    const CtPolePair p = validate_ct(1.0, 2.0);
    EXPECT_EQ(p.sigma0(), 1.0);
    EXPECT_EQ(p.omega0(), 2.0);
    EXPECT_EQ(p.pole(), std::complex<double>(-1.0, 2.0));
}

TEST(ValidateCt, RejectsBoundaryAndInvalidInputs) {
    EXPECT_EQ(code_of([] { validate_ct(0.0, 1.0); }), ErrorCode::NonCausalOrUnstable);
    EXPECT_EQ(code_of([] { validate_ct(-1.0, 1.0); }), ErrorCode::NonCausalOrUnstable);
    EXPECT_EQ(code_of([] { validate_ct(1.0, 0.0); }), ErrorCode::NotUnderdamped);
    EXPECT_EQ(code_of([] { validate_ct(1.0, -2.0); }), ErrorCode::NotUnderdamped);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_EQ(code_of([&] { validate_ct(nan, 1.0); }), ErrorCode::NonCausalOrUnstable);
    EXPECT_EQ(code_of([&] { validate_ct(1.0, nan); }), ErrorCode::NotUnderdamped);
}

TEST(ValidateDt, AcceptsPoleInsideUpperHalfDisk) {
    const DtPolePair p = validate_dt(0.5, pi / 4);
    EXPECT_EQ(p.a(), 0.5);
    EXPECT_EQ(p.omega_big0(), pi / 4);
    EXPECT_NEAR(std::abs(p.pole()), 0.5, 1e-15);
    EXPECT_NEAR(std::arg(p.pole()), pi / 4, 1e-15);
}

TEST(ValidateDt, RejectsUnitCircleAndRealAxis) {
    EXPECT_EQ(code_of([] { validate_dt(1.0, pi / 4); }), ErrorCode::OutsideUnitDisk);
    EXPECT_EQ(code_of([] { validate_dt(0.0, pi / 4); }), ErrorCode::OutsideUnitDisk);
    EXPECT_EQ(code_of([] { validate_dt(1.2, 1.0); }), ErrorCode::OutsideUnitDisk);
    EXPECT_EQ(code_of([] { validate_dt(0.5, pi); }), ErrorCode::AngleOutOfRange);
    EXPECT_EQ(code_of([] { validate_dt(0.5, 0.0); }), ErrorCode::AngleOutOfRange);
    EXPECT_EQ(code_of([] { validate_dt(0.5, -1.0); }), ErrorCode::AngleOutOfRange);
}

// Every input either round-trips exactly or is rejected with a typed error.
TEST(Validation, IsTotalAndRoundTrips) {
    auto rng = testing::make_rng(7);
    std::uniform_real_distribution<double> wide(-5.0, 5.0);
    for (int i = 0; i < 20000; ++i) {
        const double x = wide(rng);
        const double y = wide(rng);
        try {
            const CtPolePair p = validate_ct(x, y);
            EXPECT_TRUE(p.sigma0() > 0 && p.omega0() > 0);
            EXPECT_EQ(p.sigma0(), x);
            EXPECT_EQ(p.omega0(), y);
        } catch (const Error& e) {
            EXPECT_TRUE(x <= 0 || y <= 0) << to_string(e.code());
        }
        try {
            const DtPolePair p = validate_dt(x, y);
            EXPECT_TRUE(p.a() > 0 && p.a() < 1 && p.omega_big0() > 0 && p.omega_big0() < pi);
            EXPECT_EQ(p.a(), x);
            EXPECT_EQ(p.omega_big0(), y);
        } catch (const Error& e) {
            EXPECT_TRUE(x <= 0 || x >= 1 || y <= 0 || y >= pi) << to_string(e.code());
        }
    }
}

TEST(Tolerances, ValidatesInvariants) {
    EXPECT_NO_THROW(Tolerances{}.validate());
    EXPECT_EQ(code_of([] { Tolerances{0.0}.validate(); }), ErrorCode::InvalidTolerance);
    EXPECT_EQ(code_of([] { Tolerances{1e-9, 2}.validate(); }), ErrorCode::InvalidTolerance);
    EXPECT_EQ(Tolerances{}.match_slack(0.25), 0.25);
    EXPECT_EQ((Tolerances{1e-9, 101, 0.5}).match_slack(0.25), 0.5);
}

TEST(ErrorCodes, HaveStableWireNames) {
    EXPECT_EQ(to_string(ErrorCode::OutsideUnitDisk), "OutsideUnitDisk");
    EXPECT_EQ(to_string(ErrorCode::NonCausalOrUnstable), "NonCausalOrUnstable");
    EXPECT_EQ(to_string(Verdict::NonResonant), "non_resonant");
}

} // namespace
} // namespace resonance
