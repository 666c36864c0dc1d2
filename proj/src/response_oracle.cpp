#include "resonance/response_oracle.hpp"

#include "resonance/magnitude_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace resonance {

namespace {

void require_grid(std::size_t n) {
    if (n < 3) {
        throw Error(ErrorCode::BadSampleCount, "oracle grid needs at least 3 samples");
    }
}

bool exceeds(double value, double reference) {
    return value > reference * (1.0 + kOracleExceedance);
}

// Maximize f on [lo, hi].
template <typename F>
double golden_max(F&& f, long double lo, long double hi) {
    const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double x1 = hi - inv_phi * (hi - lo);
    long double x2 = lo + inv_phi * (hi - lo);
    long double f1 = f(x1);
    long double f2 = f(x2);
    for (int i = 0; i < kGoldenIterations; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return static_cast<double>((lo + hi) / 2.0L);
}

template <typename F>
void finish(OracleResult& out, F&& refine_fn) {
    ResponseSamples& s = out.samples;
    const std::size_t n = s.mags.size();
    s.argmax_index = static_cast<std::size_t>(
        std::distance(s.mags.begin(), std::max_element(s.mags.begin(), s.mags.end())));

    out.verdict = Verdict::NonResonant;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (exceeds(s.mags[k], s.reference_level)) {
            out.verdict = Verdict::Resonant;
            break;
        }
    }

    const std::size_t lo = s.argmax_index == 0 ? 0 : s.argmax_index - 1;
    const std::size_t hi = std::min(s.argmax_index + 1, n - 1);
    s.peak_frequency = golden_max(refine_fn, s.freqs[lo], s.freqs[hi]);
}

struct HalfAngleTable {
    std::size_t n = 0;
    std::vector<double> sin_half;
    std::vector<double> cos_half;
};

// Half-angle sines and cosines of the [0, pi] grid, reused across calls with
// the same n on this thread.
const HalfAngleTable& half_angle_table(std::size_t n) {
    thread_local HalfAngleTable table;
    if (table.n != n) {
        table.n = n;
        table.sin_half.resize(n);
        table.cos_half.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double half = 0.5 * std::numbers::pi * static_cast<double>(k) /
                                static_cast<double>(n - 1);
            table.sin_half[k] = std::sin(half);
            table.cos_half[k] = std::cos(half);
        }
    }
    return table;
}

} // namespace

OracleResult oracle_ct(const CtPolePair& p, std::size_t n) {
    require_grid(n);
    const double sigma0 = p.sigma0();
    const double omega0 = p.omega0();
    // The band edge sqrt(2)*omega_r is below sqrt(2)*omega_n, so [0, 4 omega_n]
    // always holds both the peak and the crossing.
    const double omega_max = 4.0 * std::hypot(sigma0, omega0);

    OracleResult out;
    ResponseSamples& s = out.samples;
    s.freqs.resize(n);
    s.mags.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = k + 1 == n ? omega_max
                                    : omega_max * static_cast<double>(k) / static_cast<double>(n - 1);
        s.freqs[k] = w;
        s.mags[k] = detail::ct_magnitude(sigma0, omega0, w);
    }
    s.reference_index = 0;
    s.reference_level = s.mags[0];

    const long double ls = sigma0;
    const long double lw = omega0;
    finish(out, [&](long double w) { return detail::ct_magnitude(ls, lw, w); });
    return out;
}

OracleResult oracle_dt(const DtPolePair& p, std::size_t n) {
    require_grid(n);
    const double a = p.a();
    const double w0 = p.omega_big0();
    const double sb = std::sin(0.5 * w0);
    const double cb = std::cos(0.5 * w0);
    const double gap = (1.0 - a) * (1.0 - a);
    const HalfAngleTable& table = half_angle_table(n);

    OracleResult out;
    ResponseSamples& s = out.samples;
    s.freqs.resize(n);
    s.mags.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.freqs[k] = k + 1 == n ? std::numbers::pi
                                : std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1);
        // sin((w -/+ w0)/2) by angle subtraction from the cached half angles
        const double minus = table.sin_half[k] * cb - table.cos_half[k] * sb;
        const double plus = table.sin_half[k] * cb + table.cos_half[k] * sb;
        const double d = (gap + 4.0 * a * minus * minus) * (gap + 4.0 * a * plus * plus);
        s.mags[k] = 1.0 / d;
    }
    s.reference_index = s.mags.front() >= s.mags.back() ? 0 : n - 1;
    s.reference_level = s.mags[s.reference_index];

    const long double la = a;
    const long double lw0 = w0;
    finish(out, [&](long double w) { return 1.0L / detail::dt_denominator(la, lw0, w); });
    return out;
}

std::vector<double> band_crossings(const ResponseSamples& samples) {
    // Samples within the exceedance band of the reference are indeterminate:
    // next to the reference endpoint the response is flat to second order and
    // rounding would otherwise register as a spurious crossing.
    std::vector<double> out;
    const auto& f = samples.freqs;
    const auto& m = samples.mags;
    const double ref = samples.reference_level;
    const auto side = [ref](double v) {
        if (exceeds(v, ref)) return 1;
        if (v < ref * (1.0 - kOracleExceedance)) return -1;
        return 0;
    };
    int state = 0;
    std::size_t last = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        const int s = side(m[k]);
        if (s == 0) continue;
        if (state != 0 && s != state) {
            const double left = m[last] - ref;
            const double right = m[k] - ref;
            const double frac = std::clamp(left / (left - right), 0.0, 1.0);
            out.push_back(f[last] + frac * (f[k] - f[last]));
        }
        state = s;
        last = k;
    }
    return out;
}

} // namespace resonance
