#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "harmonic.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace harmonic_zeros {

enum class Verdict { pass, fail, indeterminate };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

/// Zero counts of f against the caps
///   sense-preserving              <= 3(n-1)
///   sense-reversing or singular   <= 2(n-1)
///   total                         <= 5(n-1), or 5(n-1) - 1 when deg p > deg q.
struct ZeroCensus {
    int n = 0;
    int deg_p = 0;
    int deg_q = 0;
    int n_plus = 0;
    int n_minus = 0;
    int n_singular_flagged = 0;
    int bound_plus = 0;
    int bound_minus_zero = 0;
    int bound_total = 0;
    Verdict verdict = Verdict::indeterminate;
    std::vector<ClassifiedZero> zeros;

    int total() const { return n_plus + n_minus + n_singular_flagged; }
    int n_minus_zero() const { return n_minus + n_singular_flagged; }
    bool at_cap() const { return total() == bound_total; }
};

/// Verdict for given counts. With s flagged zeros the true senses are
/// unknown: each flagged zero may be preserving or belong to the
/// reversing/singular class. The census fails only if every such assignment
/// breaks a cap, and passes only if there is nothing flagged.
inline Verdict judge(int n_plus, int n_minus, int flagged, int bound_plus, int bound_minus_zero, int bound_total) {
    const int total = n_plus + n_minus + flagged;
    if (flagged == 0) {
        const bool ok = n_plus <= bound_plus && n_minus <= bound_minus_zero && total <= bound_total;
        return ok ? Verdict::pass : Verdict::fail;
    }
    const int min_to_plus = std::max(0, n_minus + flagged - bound_minus_zero);
    const int max_to_plus = std::min(flagged, bound_plus - n_plus);
    const bool feasible = total <= bound_total && min_to_plus <= max_to_plus;
    return feasible ? Verdict::indeterminate : Verdict::fail;
}

inline ZeroCensus census_of(const RationalHarmonicFunction& f, std::vector<ClassifiedZero> zeros) {
    const int n = f.degree();
    if (n < 2) throw DomainError("zero-count bounds hold for degree n >= 2 (got n = " + std::to_string(n) + ")");
    ZeroCensus c;
    c.n = n;
    c.deg_p = f.r().deg_p();
    c.deg_q = f.r().deg_q();
    const SenseCounts counts = count_senses(zeros);
    c.n_plus = counts.preserving;
    c.n_minus = counts.reversing;
    c.n_singular_flagged = counts.singular;
    c.bound_plus = 3 * (n - 1);
    c.bound_minus_zero = 2 * (n - 1);
    c.bound_total = 5 * (n - 1) - (c.deg_p > c.deg_q ? 1 : 0);
    c.verdict = judge(c.n_plus, c.n_minus, c.n_singular_flagged, c.bound_plus, c.bound_minus_zero, c.bound_total);
    c.zeros = std::move(zeros);
    return c;
}

inline ZeroCensus census(const RationalHarmonicFunction& f, const ZeroConfig& cfg = {}) {
    if (f.degree() < 2)
        throw DomainError("zero-count bounds hold for degree n >= 2 (got n = " + std::to_string(f.degree()) + ")");
    return census_of(f, find_zeros(f, cfg));
}

enum class RegularityStatus { regular, violation_suspected, not_applicable };

inline std::string_view to_string(RegularityStatus s) {
    switch (s) {
        case RegularityStatus::regular: return "regular";
        case RegularityStatus::violation_suspected: return "violation_suspected";
        case RegularityStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

struct RegularityReport {
    RegularityStatus status = RegularityStatus::not_applicable;
    /// min over zeros of ||r'(z)| - 1|
    double margin = 0.0;
    double singular_band = 0.0;
    std::string detail;
};

/// An extremal count (5(n-1), or 5(n-1) - 1 with deg p > deg q) forces all
/// zeros to be non-singular. A flagged zero next to an extremal count is
/// reported as violation_suspected for manual review, since it points at a
/// numerical artifact rather than a counterexample.
inline RegularityReport extremal_regularity_check(const ZeroCensus& c, double singular_band = ZeroConfig{}.singular_band) {
    RegularityReport rep;
    rep.singular_band = singular_band;
    rep.margin = std::numeric_limits<double>::infinity();
    for (const auto& z : c.zeros) rep.margin = std::min(rep.margin, std::abs(z.derivative_modulus - 1.0));

    const bool full = c.total() == 5 * (c.n - 1);
    const bool asymmetric = c.deg_p > c.deg_q && c.total() == 5 * (c.n - 1) - 1;
    if (!full && !asymmetric) {
        rep.status = RegularityStatus::not_applicable;
        rep.detail = std::to_string(c.total()) + " zeros is below the extremal count";
        return rep;
    }
    if (c.n_singular_flagged == 0 && rep.margin > singular_band) {
        rep.status = RegularityStatus::regular;
        rep.detail = full ? "extremal with 5(n-1) zeros" : "extremal with 5(n-1)-1 zeros and deg p > deg q";
    } else {
        rep.status = RegularityStatus::violation_suspected;
        rep.detail = "singular-band zero at an extremal count; review numerics manually";
    }
    return rep;
}

struct MigrationRow {
    double magnitude = 0.0;
    Complex c{0.0};
    /// Matching radius: half the smallest distance between zeros of f.
    double epsilon = 0.0;
    int matched = 0;
    int unmatched = 0;
    /// Singular zeros of f, outside the perturbation statement.
    int singular_skipped = 0;
    int perturbed_plus = 0;
    int perturbed_minus = 0;
    bool all_matched = false;
    bool plus_not_fewer = false;
    bool minus_not_fewer = false;
    std::string status = "ok";
};

/// Zeros of f - c for c = magnitude * direction, matched against the
/// non-singular zeros of f: a match is exactly one zero of f - c, of the same
/// sense, within epsilon of the original.
inline std::vector<MigrationRow> root_migration_experiment(const RationalHarmonicFunction& f,
                                                           const std::vector<double>& magnitudes,
                                                           Complex direction = 1.0, const ZeroConfig& cfg = {}) {
    const std::vector<ClassifiedZero> base = find_zeros(f, cfg);
    const SenseCounts base_counts = count_senses(base);
    if (base_counts.preserving + base_counts.reversing == 0)
        throw DomainError("root migration needs at least one non-singular zero");

    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            gap = std::min(gap, std::abs(base[i].location - base[j].location));
    if (!std::isfinite(gap)) {
        for (const auto& p : f.r().poles()) gap = std::min(gap, std::abs(p.value - base.front().location));
        if (!std::isfinite(gap)) gap = 2.0;
    }
    const double epsilon = 0.5 * gap;
    const Complex unit = direction / std::abs(direction);

    std::vector<MigrationRow> rows;
    for (double m : magnitudes) {
        MigrationRow row;
        row.magnitude = m;
        row.c = m * unit;
        row.epsilon = epsilon;
        try {
            const auto moved = find_zeros(f.minus_constant(row.c), cfg);
            const SenseCounts counts = count_senses(moved);
            row.perturbed_plus = counts.preserving;
            row.perturbed_minus = counts.reversing;
            for (const auto& z0 : base) {
                if (z0.sense == Sense::singular) {
                    ++row.singular_skipped;
                    continue;
                }
                int near = 0;
                bool same_sense = false;
                for (const auto& z1 : moved) {
                    if (std::abs(z1.location - z0.location) < epsilon) {
                        ++near;
                        same_sense = z1.sense == z0.sense;
                    }
                }
                (near == 1 && same_sense ? row.matched : row.unmatched)++;
            }
            row.all_matched = row.unmatched == 0;
            row.plus_not_fewer = counts.preserving >= base_counts.preserving;
            row.minus_not_fewer = counts.reversing >= base_counts.reversing;
            if (!row.all_matched) row.status = "match_failure";
        } catch (const NumericalError& e) {
            row.status = std::string("numerical_failure: ") + e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

inline Complex random_in_unit_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double radius = std::sqrt(u(rng));
    const double angle = 2.0 * std::numbers::pi * u(rng);
    return std::polar(radius, angle);
}

inline ComplexPolynomial random_polynomial(std::mt19937_64& rng, int degree) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = random_in_unit_disk(rng);
    while (std::abs(c.back()) < 1e-3) c.back() = random_in_unit_disk(rng);
    return ComplexPolynomial(std::move(c));
}

/// Reduced p/q with coefficients uniform in the unit disk.
inline RationalFunction random_rational(std::mt19937_64& rng, int deg_p, int deg_q) {
    return RationalFunction(random_polynomial(rng, deg_p), random_polynomial(rng, deg_q)).reduced();
}

/// Degree pair for the i-th instance of degree n: cycles through
/// deg p = deg q = n, deg p < deg q = n, and deg p = n > deg q.
inline std::pair<int, int> instance_shape(std::mt19937_64& rng, int n, std::size_t i) {
    std::uniform_int_distribution<int> lower(0, n - 1);
    switch (i % 3) {
        case 0: return {n, n};
        case 1: return {lower(rng), n};
        default: return {n, lower(rng)};
    }
}

}  // namespace harmonic_zeros
