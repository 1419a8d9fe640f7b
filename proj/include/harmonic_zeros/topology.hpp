#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "harmonic.hpp"

namespace harmonic_zeros {

/// Counterclockwise circle.
struct Circle {
    Complex center{0.0};
    double radius = 1.0;

    Circle() = default;
    Circle(Complex c, double r) : center(c), radius(r) {
        if (!(r > 0.0)) throw DomainError("circle radius must be positive");
    }

    Complex at(double theta) const { return center + std::polar(radius, theta); }
    bool strictly_contains(Complex z) const { return std::abs(z - center) < radius; }
};

struct WindingConfig {
    int initial_samples = 256;
    double zero_guard = 1e-10;
    std::size_t max_samples = std::size_t{1} << 20;
    double max_phase_step = std::numbers::pi / 2;
};

struct WindingResult {
    int value = 0;
    std::size_t samples_used = 0;
    /// Largest phase change between consecutive accepted samples.
    double max_step_phase = 0.0;
    /// |total / 2 pi - value|
    double rounding_error = 0.0;
};

/// Winding of f along the circle: the continuous change of arg f divided by
/// 2 pi. An interval between samples is bisected until the phase step across
/// it is below cfg.max_phase_step.
///
/// Throws OnCurveZero if |f| <= zero_guard (or f is not finite) at a sample,
/// and RefinementExhausted once max_samples evaluations are spent.
template <class Fn>
WindingResult winding(Fn&& f, const Circle& gamma, const WindingConfig& cfg = {}) {
    const double two_pi = 2.0 * std::numbers::pi;
    std::size_t used = 0;
    auto sample = [&](double theta) {
        if (++used > cfg.max_samples) throw RefinementExhausted("winding: sample cap reached");
        const Complex v = f(gamma.at(theta));
        const double m = std::abs(v);
        if (!std::isfinite(m) || m <= cfg.zero_guard)
            throw OnCurveZero("winding: f has a zero or pole on the curve (|f| = " + std::to_string(m) + ")");
        return v;
    };

    const int n0 = std::max(cfg.initial_samples, 4);
    std::vector<Complex> values(static_cast<std::size_t>(n0) + 1);
    for (int k = 0; k < n0; ++k) values[static_cast<std::size_t>(k)] = sample(two_pi * k / n0);
    values.back() = values.front();

    double total = 0.0;
    double max_step = 0.0;
    struct Interval {
        double t0, t1;
        Complex v0, v1;
    };
    std::vector<Interval> stack;
    for (int k = 0; k < n0; ++k) {
        stack.push_back({two_pi * k / n0, two_pi * (k + 1) / n0, values[static_cast<std::size_t>(k)],
                         values[static_cast<std::size_t>(k) + 1]});
        while (!stack.empty()) {
            const Interval iv = stack.back();
            stack.pop_back();
            const double step = std::arg(iv.v1 / iv.v0);
            if (std::abs(step) < cfg.max_phase_step) {
                total += step;
                max_step = std::max(max_step, std::abs(step));
                continue;
            }
            const double tm = 0.5 * (iv.t0 + iv.t1);
            const Complex vm = sample(tm);
            // right half first so the left half is processed next
            stack.push_back({tm, iv.t1, vm, iv.v1});
            stack.push_back({iv.t0, tm, iv.v0, vm});
        }
    }

    WindingResult out;
    const double turns = total / two_pi;
    out.value = static_cast<int>(std::lround(turns));
    out.rounding_error = std::abs(turns - out.value);
    out.samples_used = used;
    out.max_step_phase = max_step;
    return out;
}

template <class Fn>
WindingResult winding(Fn&& f, const Circle& gamma, int initial_samples) {
    WindingConfig cfg;
    cfg.initial_samples = initial_samples;
    return winding(std::forward<Fn>(f), gamma, cfg);
}

/// Zeros and poles of f: the points where a Poincare index is defined.
struct CriticalSet {
    std::vector<ClassifiedZero> zeros;
    std::vector<Root> poles;

    static CriticalSet of(const RationalHarmonicFunction& f, const ZeroConfig& zcfg = {}) {
        return {find_zeros(f, zcfg), f.r().poles()};
    }

    double max_modulus() const {
        double m = 0.0;
        for (const auto& z : zeros) m = std::max(m, std::abs(z.location));
        for (const auto& p : poles) m = std::max(m, std::abs(p.value));
        return m;
    }
};

/// Circle centered at 0 with radius 2 (1 + max modulus of zeros and poles) + 1.
inline Circle enclosing_circle(const CriticalSet& set) { return {0.0, 2.0 * (1.0 + set.max_modulus()) + 1.0}; }

/// Poincare index of f at z0, a zero or pole listed in `set`.
///
/// The isolating circle starts at half the distance to the nearest other
/// zero or pole and is halved while the curve hits a zero. Refuses singular
/// zeros, where the index is not determined by the sense.
inline int index(const RationalHarmonicFunction& f, Complex z0, const CriticalSet& set,
                 const WindingConfig& wcfg = {}) {
    std::vector<Complex> points;
    std::optional<std::size_t> self;
    bool self_singular = false;
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](Complex p, bool singular) {
        const double d = std::abs(p - z0);
        if (d < best) {
            best = d;
            self = points.size();
            self_singular = singular;
        }
        points.push_back(p);
    };
    for (const auto& z : set.zeros) consider(z.location, z.sense == Sense::singular);
    for (const auto& p : set.poles) consider(p.value, false);

    if (!self || best > 1e-6 * (1.0 + std::abs(z0))) throw DomainError("index: point is not a zero or pole of f");
    if (self_singular) throw IsolationFailure("index: undefined at a singular zero");

    const Complex center = points[*self];
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i)
        if (i != *self) gap = std::min(gap, std::abs(points[i] - center));
    double radius = std::isfinite(gap) ? 0.5 * gap : 0.5 * (1.0 + std::abs(center));

    while (radius > 1e-12) {
        try {
            return winding([&](Complex z) { return f.value(z); }, Circle(center, radius), wcfg).value;
        } catch (const OnCurveZero&) {
            radius *= 0.5;
        }
    }
    throw IsolationFailure("index: no isolating circle above radius 1e-12");
}

inline int index(const RationalHarmonicFunction& f, Complex z0, const WindingConfig& wcfg = {}) {
    return index(f, z0, CriticalSet::of(f), wcfg);
}

struct ArgumentPrincipleReport {
    int winding = 0;
    /// +1 per enclosed sense-preserving zero, -1 per sense-reversing zero,
    /// minus the order of every enclosed pole.
    int index_sum = 0;
    int enclosed_preserving = 0;
    int enclosed_reversing = 0;
    int enclosed_pole_order = 0;
    bool indeterminate = false;
    bool consistent = false;
};

/// Winding of f on gamma against the index sum of the enclosed zeros and
/// poles. Indeterminate when a singular zero lies inside.
inline ArgumentPrincipleReport argument_principle_check(const RationalHarmonicFunction& f, const Circle& gamma,
                                                        const CriticalSet& set, const WindingConfig& wcfg = {}) {
    ArgumentPrincipleReport rep;
    for (const auto& z : set.zeros) {
        if (!gamma.strictly_contains(z.location)) continue;
        switch (z.sense) {
            case Sense::preserving: ++rep.enclosed_preserving; break;
            case Sense::reversing: ++rep.enclosed_reversing; break;
            case Sense::singular: rep.indeterminate = true; break;
        }
    }
    for (const auto& p : set.poles)
        if (gamma.strictly_contains(p.value)) rep.enclosed_pole_order += p.multiplicity;
    rep.index_sum = rep.enclosed_preserving - rep.enclosed_reversing - rep.enclosed_pole_order;
    rep.winding = winding([&](Complex z) { return f.value(z); }, gamma, wcfg).value;
    rep.consistent = !rep.indeterminate && rep.winding == rep.index_sum;
    return rep;
}

inline ArgumentPrincipleReport argument_principle_check(const RationalHarmonicFunction& f, const Circle& gamma,
                                                        const WindingConfig& wcfg = {}) {
    return argument_principle_check(f, gamma, CriticalSet::of(f), wcfg);
}

}  // namespace harmonic_zeros
