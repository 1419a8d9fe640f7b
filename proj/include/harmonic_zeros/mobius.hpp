#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace harmonic_zeros {

/// T(z) = (a z + b) / (c z + d) with ad - bc != 0.
struct MobiusTransform {
    Complex a{1.0};
    Complex b{0.0};
    Complex c{0.0};
    Complex d{1.0};

    MobiusTransform() = default;
    MobiusTransform(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {
        const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
        if (!(std::abs(determinant()) > 1e-13 * scale * scale))
            throw DomainError("degenerate Mobius transformation: ad - bc = 0");
    }

    static MobiusTransform identity() { return {}; }
    static MobiusTransform reciprocal() { return {0.0, 1.0, 1.0, 0.0}; }
    static MobiusTransform translation(Complex shift) { return {1.0, shift, 0.0, 1.0}; }
    /// w = 1 / (z - center)
    static MobiusTransform inversion_about(Complex center) { return {0.0, 1.0, 1.0, -center}; }

    Complex determinant() const { return a * d - b * c; }

    ExtendedComplex apply(const ExtendedComplex& z) const {
        if (z.is_infinite()) {
            if (c == Complex{0.0}) return ExtendedComplex::infinity();
            return a / c;
        }
        const Complex den = c * z.value() + d;
        if (den == Complex{0.0}) return ExtendedComplex::infinity();
        return (a * z.value() + b) / den;
    }

    ExtendedComplex operator()(const ExtendedComplex& z) const { return apply(z); }

    /// T'(z) = (ad - bc) / (cz + d)^2
    Complex derivative(Complex z) const {
        const Complex den = c * z + d;
        return determinant() / (den * den);
    }

    /// T^{-1}(w) = (dw - b) / (a - cw)
    MobiusTransform inverse() const { return {d, -b, -c, a}; }

    MobiusTransform conjugate_transform() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }

    friend bool operator==(const MobiusTransform&, const MobiusTransform&) = default;
};

inline MobiusTransform inverse(const MobiusTransform& t) { return t.inverse(); }
inline MobiusTransform conjugate_transform(const MobiusTransform& t) { return t.conjugate_transform(); }

/// The co-conjugate R = conj(T) o r o T^{-1}, built from the explicit
/// coefficient formula
///
///   R(w) = sum_k (conj(a) p_k + conj(b) q_k) (dw - b)^k (a - cw)^(n-k)
///        / sum_k (conj(c) p_k + conj(d) q_k) (dw - b)^k (a - cw)^(n-k)
///
/// with p and q zero-padded to n = deg r, then reduced. Raises
/// DegenerateResult when the reduction loses degree, which only happens for
/// an input that was not coprime.
inline RationalFunction co_conjugate_unreduced(const RationalFunction& r, const MobiusTransform& t) {
    const int n = r.degree();
    if (n < 1) throw DomainError("co_conjugate: deg r must be at least 1");

    const ComplexPolynomial inv_num({-t.b, t.d});  // dw - b
    const ComplexPolynomial inv_den({t.a, -t.c});  // a - cw
    std::vector<ComplexPolynomial> num_pow{ComplexPolynomial::constant(1.0)};
    std::vector<ComplexPolynomial> den_pow{ComplexPolynomial::constant(1.0)};
    for (int k = 1; k <= n; ++k) {
        num_pow.push_back(num_pow.back() * inv_num);
        den_pow.push_back(den_pow.back() * inv_den);
    }

    const auto& p = r.numerator();
    const auto& q = r.denominator();
    ComplexPolynomial top;
    ComplexPolynomial bottom;
    for (int k = 0; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const ComplexPolynomial basis = num_pow[idx] * den_pow[static_cast<std::size_t>(n - k)];
        top = top + (std::conj(t.a) * p.coeff(k) + std::conj(t.b) * q.coeff(k)) * basis;
        bottom = bottom + (std::conj(t.c) * p.coeff(k) + std::conj(t.d) * q.coeff(k)) * basis;
    }
    return {std::move(top), std::move(bottom)};
}

inline RationalFunction co_conjugate(const RationalFunction& r, const MobiusTransform& t) {
    RationalFunction result = co_conjugate_unreduced(r, t).reduced();
    if (result.degree() != r.degree())
        throw DegenerateResult("co_conjugate: degree dropped from " + std::to_string(r.degree()) + " to " +
                               std::to_string(result.degree()) + "; input is not coprime");
    return result;
}

/// R'(T(z)) for R = co_conjugate(r, T), by the chain rule
/// R'(w) = conj(T)'(r(z)) r'(z) / T'(z).
///
/// At a zero of r(z) - conj(z) this reduces to conj(T'(z))/T'(z) r'(z), so
/// |R'(w)| = |r'(z)| there.
inline Complex derivative_at_image(const RationalFunction& r, const MobiusTransform& t, Complex z) {
    const Complex tz_den = t.c * z + t.d;
    if (tz_den == Complex{0.0}) throw DomainError("derivative_at_image: T(z) is infinite");
    const Complex t_prime = t.derivative(z);
    if (std::abs(t_prime) == 0.0 || !std::isfinite(std::abs(t_prime)))
        throw SingularPoint("derivative_at_image: T'(z) vanishes");
    const ExtendedComplex rz = r.eval(z);
    if (rz.is_infinite()) throw PoleEvaluation("derivative_at_image: z is a pole of r");
    const MobiusTransform tc = t.conjugate_transform();
    return tc.derivative(rz.value()) * r.derivative_value(z) / t_prime;
}

/// R'(0) for the co-conjugate under w = 1/z when deg p > deg q:
/// the limit of (p'q - pq') z^2 / p^2 as z -> infinity, i.e. q_{n-1} / p_n.
inline Complex reciprocal_coconjugate_derivative_at_origin(const RationalFunction& r) {
    const int n = r.degree();
    if (r.deg_p() <= r.deg_q()) throw DomainError("requires deg p > deg q");
    return r.denominator().coeff(n - 1) / r.numerator().coeff(n);
}

}  // namespace harmonic_zeros
