#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace harmonic_zeros {

/// A point of the Riemann sphere: a finite complex number or infinity.
class ExtendedComplex {
public:
    ExtendedComplex() = default;
    ExtendedComplex(Complex z) : value_(z) {}  // NOLINT: implicit by intent

    static ExtendedComplex infinity() {
        ExtendedComplex p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    Complex value() const {
        if (infinite_) throw DomainError("value() called on the point at infinity");
        return value_;
    }

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

private:
    Complex value_{0.0};
    bool infinite_ = false;
};

struct ReduceConfig {
    /// Roots of p and q closer than this are treated as common.
    double gcd_tol = 1e-9;
    /// Relative residual under which a root of q is accepted as a root of p.
    double residual_tol = 1e-10;
    /// Approximations of q's roots within this relative distance are also
    /// tried through their centroid, which is how multiple roots are matched.
    double cluster_probe = 1e-3;
};

/// r = p / q with complex coefficients.
///
/// degree() follows max(deg p, deg q). The constructor does not remove
/// common factors; call reduced() for that. p' and q' are cached so that
/// r'(z) can be evaluated without building the derivative quotient.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(ComplexPolynomial{}, ComplexPolynomial::constant(1.0)) {}

    RationalFunction(ComplexPolynomial p, ComplexPolynomial q) : p_(std::move(p)), q_(std::move(q)) {
        if (q_.is_zero()) throw DomainError("rational function with zero denominator");
        dp_ = p_.derivative();
        dq_ = q_.derivative();
    }

    static RationalFunction polynomial(ComplexPolynomial p) {
        return {std::move(p), ComplexPolynomial::constant(1.0)};
    }

    const ComplexPolynomial& numerator() const { return p_; }
    const ComplexPolynomial& denominator() const { return q_; }

    int deg_p() const { return p_.is_zero() ? 0 : p_.degree(); }
    int deg_q() const { return q_.degree(); }
    int degree() const { return std::max(deg_p(), deg_q()); }

    /// Raw p(z)/q(z); inf or nan at poles.
    Complex value(Complex z) const { return p_.eval(z) / q_.eval(z); }

    /// r'(z) = (p'q - pq') / q^2 evaluated pointwise.
    Complex derivative_value(Complex z) const {
        const Complex qz = q_.eval(z);
        return (dp_.eval(z) * qz - p_.eval(z) * dq_.eval(z)) / (qz * qz);
    }

    /// Evaluation on the Riemann sphere. A vanishing denominator yields
    /// infinity; p and q vanishing together raises IndeterminateValue.
    ExtendedComplex eval(Complex z) const {
        const Complex pz = p_.eval(z);
        const Complex qz = q_.eval(z);
        const double az = std::abs(z);
        const double tol = 1e-13;
        const bool p_small = std::abs(pz) <= tol * p_.magnitude_sum(az);
        const bool q_small = std::abs(qz) <= tol * q_.magnitude_sum(az);
        if (p_small && q_small && !p_.is_zero()) throw IndeterminateValue("p and q vanish together");
        if (qz == Complex{0.0}) return ExtendedComplex::infinity();
        return pz / qz;
    }

    ExtendedComplex eval(const ExtendedComplex& z) const {
        if (z.is_finite()) return eval(z.value());
        if (p_.is_zero()) return Complex{0.0};
        if (deg_p() > deg_q()) return ExtendedComplex::infinity();
        if (deg_p() < deg_q()) return Complex{0.0};
        return p_.leading() / q_.leading();
    }

    RationalFunction conjugate_variant() const { return {p_.conjugate_coeffs(), q_.conjugate_coeffs()}; }

    /// Common factors of p and q removed (see ReduceConfig for the matching
    /// rules). The result represents the same function away from the
    /// cancelled points.
    RationalFunction reduced(const ReduceConfig& cfg = {}) const;

    /// (p'q - pq') / q^2, reduced.
    RationalFunction derivative() const { return RationalFunction(dp_ * q_ - p_ * dq_, q_ * q_).reduced(); }

    /// Roots of q with their orders; the orders sum to deg q.
    std::vector<Root> poles(const RootConfig& cfg = {}) const {
        if (q_.degree() < 1) return {};
        return roots(q_, cfg);
    }

private:
    ComplexPolynomial p_;
    ComplexPolynomial q_;
    ComplexPolynomial dp_;
    ComplexPolynomial dq_;
};

namespace detail {

inline bool relatively_vanishes(const ComplexPolynomial& p, Complex z, double tol) {
    return std::abs(p.eval(z)) <= tol * p.magnitude_sum(std::abs(z));
}

// A point where both p and q vanish, if one is found.
inline std::optional<Complex> find_common_root(const ComplexPolynomial& p, const ComplexPolynomial& q,
                                               const ReduceConfig& cfg) {
    const RootConfig rc;
    std::vector<Complex> q_roots;
    for (const auto& r : aberth_roots(q, rc).roots) q_roots.push_back(r.value);
    std::vector<Complex> p_roots;
    for (const auto& r : aberth_roots(p, rc).roots) p_roots.push_back(r.value);

    for (Complex zq : q_roots)
        for (Complex zp : p_roots)
            if (std::abs(zq - zp) < cfg.gcd_tol) return 0.5 * (zq + zp);

    std::vector<Complex> probes = q_roots;
    for (std::size_t i = 0; i < q_roots.size(); ++i) {
        Complex sum = q_roots[i];
        int count = 1;
        for (std::size_t j = 0; j < q_roots.size(); ++j)
            if (j != i && std::abs(q_roots[i] - q_roots[j]) < cfg.cluster_probe * (1.0 + std::abs(q_roots[i]))) {
                sum += q_roots[j];
                ++count;
            }
        if (count > 1) probes.push_back(sum / static_cast<double>(count));
    }
    for (Complex z : probes)
        if (relatively_vanishes(p, z, cfg.residual_tol) && relatively_vanishes(q, z, cfg.residual_tol)) return z;
    return std::nullopt;
}

}  // namespace detail

inline RationalFunction RationalFunction::reduced(const ReduceConfig& cfg) const {
    if (p_.is_zero()) return {ComplexPolynomial{}, ComplexPolynomial::constant(1.0)};
    ComplexPolynomial p = p_;
    ComplexPolynomial q = q_;
    while (p.degree() >= 1 && q.degree() >= 1) {
        const auto common = detail::find_common_root(p, q, cfg);
        if (!common) break;
        p = p.divided_by_linear(*common);
        q = q.divided_by_linear(*common);
    }
    return {std::move(p), std::move(q)};
}

inline RationalFunction reduce(const RationalFunction& r, const ReduceConfig& cfg = {}) { return r.reduced(cfg); }
inline RationalFunction derivative(const RationalFunction& r) { return r.derivative(); }
inline RationalFunction conjugate_variant(const RationalFunction& r) { return r.conjugate_variant(); }

/// Numerator and denominator of r(s(z)) before reduction:
/// sum_k P_k A^k B^(n-k) and sum_k Q_k A^k B^(n-k) with s = A/B and both P, Q
/// padded to n = deg r.
inline std::pair<ComplexPolynomial, ComplexPolynomial> compose_unreduced(const RationalFunction& r,
                                                                         const RationalFunction& s) {
    const int n = r.degree();
    const auto& a = s.numerator();
    const auto& b = s.denominator();
    std::vector<ComplexPolynomial> a_pow{ComplexPolynomial::constant(1.0)};
    std::vector<ComplexPolynomial> b_pow{ComplexPolynomial::constant(1.0)};
    for (int k = 1; k <= n; ++k) {
        a_pow.push_back(a_pow.back() * a);
        b_pow.push_back(b_pow.back() * b);
    }
    ComplexPolynomial num;
    ComplexPolynomial den;
    for (int k = 0; k <= n; ++k) {
        const ComplexPolynomial term = a_pow[static_cast<std::size_t>(k)] * b_pow[static_cast<std::size_t>(n - k)];
        num = num + r.numerator().coeff(k) * term;
        den = den + r.denominator().coeff(k) * term;
    }
    return {std::move(num), std::move(den)};
}

/// r o s, reduced.
inline RationalFunction compose(const RationalFunction& r, const RationalFunction& s) {
    auto [num, den] = compose_unreduced(r, s);
    return RationalFunction(std::move(num), std::move(den)).reduced();
}

}  // namespace harmonic_zeros
