#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "harmonic.hpp"
#include "mobius.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "text_format.hpp"

namespace harmonic_zeros {

/// z^(n-1) / (z^n - a^n) - conj(z): degree n, deg p < deg q.
inline RationalHarmonicFunction mpw(int n, double a) {
    if (n < 2) throw DomainError("mpw: n must be at least 2");
    if (!(a > 0.0 && a < 1.0)) throw DomainError("mpw: a must lie in (0, 1)");
    ComplexPolynomial q = ComplexPolynomial::monomial(n) - ComplexPolynomial::constant(std::pow(a, n));
    return RationalHarmonicFunction(RationalFunction(ComplexPolynomial::monomial(n - 1), std::move(q)));
}

/// (1 - eps) z^(n-1) / (z^n - a^n) + eps / z - conj(z), assembled in the
/// closed form (z^n - eps a^n) / (z^(n+1) - a^n z). Degree n + 1 for eps > 0;
/// eps = 0 cancels the common z and returns mpw(n, a).
inline RationalHarmonicFunction rhie(int n, double a, double eps) {
    if (n < 3) throw DomainError("rhie: n must be at least 3");
    if (!(a > 0.0 && a < 1.0)) throw DomainError("rhie: a must lie in (0, 1)");
    if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("rhie: eps must lie in [0, 1)");
    const double an = std::pow(a, n);
    ComplexPolynomial p = ComplexPolynomial::monomial(n) - ComplexPolynomial::constant(eps * an);
    ComplexPolynomial q = ComplexPolynomial::monomial(n + 1) - ComplexPolynomial::monomial(1, an);
    return RationalHarmonicFunction(RationalFunction(std::move(p), std::move(q)).reduced());
}

/// The convex-combination form of the Rhie rational part, evaluated directly.
inline Complex rhie_convex_value(int n, double a, double eps, Complex z) {
    const Complex zn = std::pow(z, n);
    return (1.0 - eps) * std::pow(z, n - 1) / (zn - std::pow(a, n)) + eps / z;
}

/// f(z) = z + 1/z - conj(z) and its co-conjugate under w = 1/z,
/// F(w) = w / (1 + w^2) - conj(w).
inline std::pair<RationalHarmonicFunction, RationalHarmonicFunction> intro_counterexample() {
    RationalHarmonicFunction f(RationalFunction({1.0, 0.0, 1.0}, {0.0, 1.0}));
    RationalHarmonicFunction big_f(RationalFunction({0.0, 1.0}, {1.0, 0.0, 1.0}));
    return {std::move(f), std::move(big_f)};
}

/// Largest real part; ties (within 1e-9) go to the larger imaginary part.
inline ClassifiedZero rightmost_zero(const std::vector<ClassifiedZero>& zeros) {
    if (zeros.empty()) throw DomainError("rightmost_zero: empty zero set");
    return *std::max_element(zeros.begin(), zeros.end(), [](const ClassifiedZero& x, const ClassifiedZero& y) {
        if (std::abs(x.location.real() - y.location.real()) > 1e-9) return x.location.real() < y.location.real();
        return x.location.imag() < y.location.imag();
    });
}

/// Co-conjugate of r under w = 1/(z - z0) for a zero z0 of f. The zero z0
/// goes to infinity, so the denominator loses its top coefficient and the
/// result has deg p = n > deg q.
inline RationalHarmonicFunction coconj_extremal(const RationalHarmonicFunction& f, Complex z0) {
    const double res = std::abs(f.value(z0));
    if (!(res <= 1e-8 * (1.0 + std::abs(z0))))
        throw NotAZero("coconj_extremal: |f(z0)| = " + std::to_string(res) + " is not a zero");
    const int n = f.degree();
    const RationalFunction raw = co_conjugate_unreduced(f.r(), MobiusTransform::inversion_about(z0));

    // the w^n coefficient of the denominator is (-1)^n (p(z0) - conj(z0) q(z0)) = 0
    std::vector<Complex> den(raw.denominator().coeffs().begin(), raw.denominator().coeffs().end());
    const double scale = raw.denominator().max_coeff_magnitude();
    if (static_cast<int>(den.size()) == n + 1 && std::abs(den.back()) <= 1e-8 * scale) den.pop_back();
    RationalFunction r = RationalFunction(raw.numerator(), ComplexPolynomial(std::move(den))).reduced();
    if (r.degree() != n)
        throw DegenerateResult("coconj_extremal: degree " + std::to_string(r.degree()) + " != " + std::to_string(n));
    return RationalHarmonicFunction(std::move(r));
}

// ---------------------------------------------------------------------------
// Parameter sweeps
// ---------------------------------------------------------------------------

enum class Family { mpw, rhie };

inline std::string_view to_string(Family f) { return f == Family::mpw ? "mpw" : "rhie"; }

inline Family parse_family(std::string_view s) {
    if (s == "mpw") return Family::mpw;
    if (s == "rhie") return Family::rhie;
    throw ParseError("unknown family '" + std::string(s) + "' (expected mpw or rhie)");
}

inline RationalHarmonicFunction build_family(Family family, int n, double a, double eps) {
    return family == Family::mpw ? mpw(n, a) : rhie(n, a, eps);
}

struct ParameterRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    /// lo, lo + step, ..., up to hi inclusive; values rounded to 1e-10 so
    /// that decimal grids print cleanly.
    std::vector<double> values() const {
        if (!(step > 0.0) || hi < lo) throw DomainError("invalid parameter range");
        std::vector<double> out;
        for (long i = 0;; ++i) {
            const double v = std::round((lo + static_cast<double>(i) * step) * 1e10) / 1e10;
            if (v > hi + 1e-12) break;
            out.push_back(v);
        }
        return out;
    }

    static ParameterRange single(double v) { return {v, v, 1.0}; }
};

struct SweepRow {
    Family family = Family::mpw;
    int n = 0;
    double a = 0.0;
    double eps = 0.0;
    int zero_count = 0;
    int n_plus = 0;
    int n_minus = 0;
    int n_singular_flagged = 0;
    std::string status = "ok";
};

/// Zero counts over the (a, eps) grid, sorted by (a, eps). For mpw the eps
/// range is ignored and reported as 0. Failing rows keep their error text in
/// `status`.
inline std::vector<SweepRow> sweep(Family family, int n, const ParameterRange& a_range,
                                   const ParameterRange& eps_range, const ZeroConfig& cfg = {},
                                   unsigned threads = worker_count()) {
    std::vector<SweepRow> rows;
    const std::vector<double> eps_values = family == Family::mpw ? std::vector<double>{0.0} : eps_range.values();
    for (double a : a_range.values())
        for (double e : eps_values) rows.push_back({family, n, a, e, 0, 0, 0, 0, "ok"});

    parallel_for(rows.size(), threads, [&](std::size_t i) {
        SweepRow& row = rows[i];
        try {
            const auto f = build_family(family, n, row.a, row.eps);
            const auto counts = count_senses(find_zeros(f, cfg));
            row.zero_count = counts.total();
            row.n_plus = counts.preserving;
            row.n_minus = counts.reversing;
            row.n_singular_flagged = counts.singular;
        } catch (const NumericalError& e) {
            row.status = std::string("numerical_failure: ") + e.what();
        } catch (const DomainError& e) {
            row.status = std::string("domain_error: ") + e.what();
        }
    });
    return rows;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "family,n,a,eps,zero_count,n_plus,n_minus,n_singular_flagged,status\n";
    for (const auto& r : rows) {
        std::string status = r.status;
        std::replace(status.begin(), status.end(), ',', ';');
        os << to_string(r.family) << ',' << r.n << ',' << format_real(r.a) << ',' << format_real(r.eps) << ','
           << r.zero_count << ',' << r.n_plus << ',' << r.n_minus << ',' << r.n_singular_flagged << ',' << status
           << '\n';
    }
}

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

/// One named function. `spec` is the text form; family entries also carry
/// the parameters they were built from so that the text can be rechecked.
struct GalleryEntry {
    std::string name;
    std::string spec;
    int degree = 0;
    std::optional<int> expected_zero_count;
    std::string provenance;
    std::optional<std::string> family;  // mpw | rhie | coconj_rightmost
    int n = 0;
    double a = 0.0;
    double eps = 0.0;
    std::optional<std::string> base;  // coconj_rightmost: entry it is built from

    RationalHarmonicFunction function() const { return RationalHarmonicFunction(parse_rational(spec)); }
};

struct GalleryManifest {
    std::vector<GalleryEntry> entries;

    const GalleryEntry& at(std::string_view name) const {
        for (const auto& e : entries)
            if (e.name == name) return e;
        throw DomainError("no gallery entry named '" + std::string(name) + "'");
    }
};

inline GalleryManifest parse_manifest(const nlohmann::json& j) {
    GalleryManifest m;
    for (const auto& item : j.at("entries")) {
        GalleryEntry e;
        e.name = item.at("name").get<std::string>();
        e.spec = item.at("spec").get<std::string>();
        e.degree = item.at("degree").get<int>();
        const auto& count = item.at("expected_zero_count");
        if (count.is_number_integer()) e.expected_zero_count = count.get<int>();
        e.provenance = item.at("provenance").get<std::string>();
        if (item.contains("family")) {
            e.family = item.at("family").get<std::string>();
            e.n = item.value("n", 0);
            e.a = item.value("a", 0.0);
            e.eps = item.value("eps", 0.0);
            if (item.contains("base")) e.base = item.at("base").get<std::string>();
        }
        m.entries.push_back(std::move(e));
    }
    return m;
}

inline GalleryManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open gallery manifest '" + path + "'");
    try {
        return parse_manifest(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("gallery manifest '" + path + "': " + e.what());
    }
}

/// Rebuilds a family entry from its parameters (mpw, rhie, or the rightmost
/// co-conjugate of another entry).
inline RationalHarmonicFunction build_entry(const GalleryManifest& m, const GalleryEntry& e,
                                            const ZeroConfig& cfg = {}) {
    if (!e.family) return e.function();
    if (*e.family == "coconj_rightmost") {
        if (!e.base) throw ParseError("entry '" + e.name + "' lacks a base");
        const auto base = build_entry(m, m.at(*e.base), cfg);
        return coconj_extremal(base, rightmost_zero(find_zeros(base, cfg)).location);
    }
    return build_family(parse_family(*e.family), e.n, e.a, e.eps);
}

}  // namespace harmonic_zeros
