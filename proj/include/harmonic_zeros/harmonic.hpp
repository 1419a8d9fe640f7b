#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace harmonic_zeros {

enum class Sense { preserving, reversing, singular };

inline std::string_view to_string(Sense s) {
    switch (s) {
        case Sense::preserving: return "preserving";
        case Sense::reversing: return "reversing";
        case Sense::singular: return "singular";
    }
    return "?";
}

struct ZeroConfig {
    double residual_tol = 1e-9;
    double cluster_radius = 1e-7;
    /// Half-width of the band around |r'(z)| = 1 reported as singular.
    double singular_band = 1e-8;
    int newton_refine_steps = 5;
    /// Candidates this close to a pole of r are discarded.
    double pole_exclusion = 1e-9;
};

struct ClassifiedZero {
    Complex location;
    double residual = 0.0;
    double derivative_modulus = 0.0;
    Sense sense = Sense::singular;
    /// +1 / -1 from the sense; empty for singular zeros.
    std::optional<int> index;

    bool suspect_singular() const { return sense == Sense::singular; }
};

inline Sense classify_modulus(double derivative_modulus, double band) {
    if (derivative_modulus > 1.0 + band) return Sense::preserving;
    if (derivative_modulus < 1.0 - band) return Sense::reversing;
    return Sense::singular;
}

inline std::optional<int> index_for(Sense s) {
    switch (s) {
        case Sense::preserving: return 1;
        case Sense::reversing: return -1;
        case Sense::singular: return std::nullopt;
    }
    return std::nullopt;
}

/// f(z) = r(z) - conj(z).
class RationalHarmonicFunction {
public:
    explicit RationalHarmonicFunction(RationalFunction r) : r_(std::move(r)) {
        if (r_.degree() < 1) throw DomainError("rational harmonic function needs deg r >= 1");
    }

    const RationalFunction& r() const { return r_; }
    int degree() const { return r_.degree(); }

    /// r(z) - conj(z) without pole checks (inf/nan at poles).
    Complex value(Complex z) const { return r_.value(z) - std::conj(z); }
    Complex operator()(Complex z) const { return value(z); }

    Complex eval(Complex z) const {
        const ExtendedComplex rz = r_.eval(z);
        if (rz.is_infinite()) throw PoleEvaluation("f evaluated at a pole of r");
        const Complex v = rz.value() - std::conj(z);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw PoleEvaluation("f is not finite here");
        return v;
    }

    /// The function shifted by a constant: r(z) - c - conj(z).
    RationalHarmonicFunction minus_constant(Complex c) const {
        return RationalHarmonicFunction(
            RationalFunction(r_.numerator() - c * r_.denominator(), r_.denominator()));
    }

private:
    RationalFunction r_;
};

inline Complex eval_f(const RationalHarmonicFunction& f, Complex z) { return f.eval(z); }

struct SenseReading {
    double derivative_modulus;
    Sense sense;
};

inline SenseReading sense_at(const RationalHarmonicFunction& f, Complex z, double band = ZeroConfig{}.singular_band) {
    if (f.r().eval(z).is_infinite()) throw PoleEvaluation("sense_at: z is a pole of r");
    const double m = std::abs(f.r().derivative_value(z));
    if (!std::isfinite(m)) throw PoleEvaluation("sense_at: r'(z) is not finite");
    return {m, classify_modulus(m, band)};
}

/// Numerator of r*(r(z)) - z, where r* has conjugated coefficients. Every
/// zero of f is a root: conj(z) = r(z) implies z = r*(r(z)).
inline ComplexPolynomial fixed_point_polynomial(const RationalFunction& r) {
    auto [num, den] = compose_unreduced(r.conjugate_variant(), r);
    return num - den.shifted(1);
}

namespace detail {

// Damped Newton on the real system (Re f, Im f). Writing a = r'(z), the
// linearization a dz - conj(dz) = -f has the solution
// dz = (conj(b) + conj(a) b) / (|a|^2 - 1) with b = -f.
inline Complex refine_zero(const RationalFunction& r, Complex z, int steps) {
    auto residual = [&](Complex w) { return std::abs(r.value(w) - std::conj(w)); };
    double res = residual(z);
    for (int it = 0; it < steps && res > 0.0 && std::isfinite(res); ++it) {
        const Complex a = r.derivative_value(z);
        const Complex b = -(r.value(z) - std::conj(z));
        const double den = std::norm(a) - 1.0;
        if (den == 0.0 || !std::isfinite(den)) break;
        Complex dz = (std::conj(b) + std::conj(a) * b) / den;
        bool improved = false;
        for (int halving = 0; halving < 30; ++halving) {
            const Complex trial = z + dz;
            const double trial_res = residual(trial);
            if (trial_res < res) {
                z = trial;
                res = trial_res;
                improved = true;
                break;
            }
            dz *= 0.5;
        }
        if (!improved) break;
    }
    return z;
}

struct Candidate {
    Complex z;
    double residual;
    double modulus;
};

// Merges candidates into groups (union-find), keeping the best residual.
template <class Linked>
std::vector<Candidate> merge_candidates(const std::vector<Candidate>& in, Linked linked) {
    const std::size_t m = in.size();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (linked(in[i], in[j])) parent[find(i)] = find(j);
    std::vector<long> best(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t root = find(i);
        if (best[root] < 0 || in[i].residual < in[static_cast<std::size_t>(best[root])].residual)
            best[root] = static_cast<long>(i);
    }
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < m; ++i)
        if (find(i) == i) out.push_back(in[static_cast<std::size_t>(best[i])]);
    return out;
}

// s(u) = r(u + c) - conj(c); u is a zero of s(u) - conj(u) iff u + c is a
// zero of f.
inline RationalFunction recentered(const RationalFunction& r, Complex c) {
    const ComplexPolynomial q = r.denominator().translated(c);
    return RationalFunction(r.numerator().translated(c) - q.scaled(std::conj(c)), q);
}

}  // namespace detail

/// All zeros of f(z) = r(z) - conj(z), classified by sense.
///
/// Candidates are the roots of fixed_point_polynomial(r). Each candidate is
/// polished by damped Newton steps on the real 2x2 system and kept when
/// |f(z)| <= residual_tol (1 + |z|). Survivors within cluster_radius are
/// merged; so are near-singular candidates within 1e-5 (1 + |z|) of each
/// other, since a singular zero is a multiple root of the fixed-point
/// polynomial and its approximations scatter beyond cluster_radius.
/// The result is sorted by real, then imaginary part.
///
/// Zeros far from the origin make the monomial coefficients badly
/// conditioned, so when the centroid c of the fixed-point roots is not near 0
/// a second candidate set is taken from f(u + c) and the two are pooled.
///
/// Throws DegenerateZeroSet if the fixed-point polynomial vanishes
/// identically (non-isolated zeros) and ConvergenceFailure when the root
/// finder fails on every candidate pass.
inline std::vector<ClassifiedZero> find_zeros(const RationalHarmonicFunction& f, const ZeroConfig& cfg = {}) {
    const RationalFunction& r = f.r();
    const ComplexPolynomial fixed = fixed_point_polynomial(r);
    if (fixed.is_zero()) throw DegenerateZeroSet("zeros of r(z) - conj(z) are not isolated");
    if (fixed.degree() < 1) return {};

    RootConfig rc;
    rc.cluster_radius = 0.0;  // clustering happens after refinement
    std::vector<Complex> candidates;
    int failed_passes = 0;
    auto collect = [&](const ComplexPolynomial& p, Complex offset) {
        const RootResult rr = aberth_roots(p, rc);
        if (!rr.all_converged()) ++failed_passes;
        for (const auto& root : rr.roots) candidates.push_back(root.value + offset);
    };
    collect(fixed, 0.0);
    int passes = 1;
    if (fixed.degree() >= 2) {
        const Complex centroid = -fixed.coeff(fixed.degree() - 1) / (static_cast<double>(fixed.degree()) * fixed.leading());
        if (std::abs(centroid) > 0.05 && std::isfinite(std::abs(centroid))) {
            const ComplexPolynomial moved = fixed_point_polynomial(detail::recentered(r, centroid));
            if (moved.degree() >= 1) {
                collect(moved, centroid);
                ++passes;
            }
        }
    }
    if (failed_passes == passes)
        throw ConvergenceFailure("root finder did not converge on the fixed-point polynomial");

    std::vector<Complex> poles;
    if (r.deg_q() >= 1)
        for (const auto& p : aberth_roots(r.denominator()).roots) poles.push_back(p.value);

    std::vector<detail::Candidate> kept;
    for (const Complex z0 : candidates) {
        if (!std::isfinite(z0.real()) || !std::isfinite(z0.imag())) continue;
        const Complex z = detail::refine_zero(r, z0, cfg.newton_refine_steps);
        const bool near_pole = std::any_of(poles.begin(), poles.end(), [&](Complex p) {
            return std::abs(z - p) < cfg.pole_exclusion;
        });
        if (near_pole) continue;
        const double res = std::abs(r.value(z) - std::conj(z));
        if (!(res <= cfg.residual_tol * (1.0 + std::abs(z)))) continue;
        kept.push_back({z, res, std::abs(r.derivative_value(z))});
    }

    kept = detail::merge_candidates(kept, [&](const detail::Candidate& a, const detail::Candidate& b) {
        return std::abs(a.z - b.z) < cfg.cluster_radius;
    });
    kept = detail::merge_candidates(kept, [&](const detail::Candidate& a, const detail::Candidate& b) {
        const bool both_near_singular = std::abs(a.modulus - 1.0) < 1e-3 && std::abs(b.modulus - 1.0) < 1e-3;
        return both_near_singular && std::abs(a.z - b.z) < 1e-5 * (1.0 + std::abs(a.z));
    });

    std::vector<ClassifiedZero> zeros;
    zeros.reserve(kept.size());
    for (const auto& c : kept) {
        const Sense s = classify_modulus(c.modulus, cfg.singular_band);
        zeros.push_back({c.z, c.residual, c.modulus, s, index_for(s)});
    }
    std::sort(zeros.begin(), zeros.end(), [](const ClassifiedZero& a, const ClassifiedZero& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return zeros;
}

struct SenseCounts {
    int preserving = 0;
    int reversing = 0;
    int singular = 0;
    int total() const { return preserving + reversing + singular; }
};

inline SenseCounts count_senses(const std::vector<ClassifiedZero>& zeros) {
    SenseCounts c;
    for (const auto& z : zeros) {
        switch (z.sense) {
            case Sense::preserving: ++c.preserving; break;
            case Sense::reversing: ++c.reversing; break;
            case Sense::singular: ++c.singular; break;
        }
    }
    return c;
}

}  // namespace harmonic_zeros
