#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace harmonic_zeros {

using Complex = std::complex<double>;

/// Polynomial with complex coefficients stored in ascending powers.
///
/// Construction always normalizes: leading coefficients whose magnitude is
/// below kTrimRelative * max|coeff| are dropped, so arithmetic noise never
/// inflates the degree. The zero polynomial has an empty coefficient vector
/// and degree kZeroDegree.
class ComplexPolynomial {
public:
    static constexpr int kZeroDegree = INT_MIN;
    static constexpr double kTrimRelative = 1e-13;

    ComplexPolynomial() = default;
    ComplexPolynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static ComplexPolynomial constant(Complex c) { return ComplexPolynomial({c}); }
    static ComplexPolynomial identity() { return ComplexPolynomial({Complex{0.0}, Complex{1.0}}); }

    /// z^k
    static ComplexPolynomial monomial(int k, Complex c = 1.0) {
        std::vector<Complex> v(static_cast<std::size_t>(k) + 1, Complex{0.0});
        v.back() = c;
        return ComplexPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

    std::span<const Complex> coeffs() const { return coeffs_; }

    /// Coefficient of z^k; zero beyond the degree.
    Complex coeff(int k) const {
        return (k >= 0 && static_cast<std::size_t>(k) < coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)]
                                                                           : Complex{0.0};
    }

    Complex leading() const { return is_zero() ? Complex{0.0} : coeffs_.back(); }

    double max_coeff_magnitude() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    Complex operator()(Complex z) const { return eval(z); }

    Complex eval(Complex z) const {
        Complex acc{0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// p(z) and p'(z) in one Horner pass.
    std::pair<Complex, Complex> eval_with_derivative(Complex z) const {
        Complex value{0.0};
        Complex deriv{0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            deriv = deriv * z + value;
            value = value * z + *it;
        }
        return {value, deriv};
    }

    /// sum |p_k| |z|^k, the scale of the rounding error committed by Horner.
    double magnitude_sum(double abs_z) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * abs_z + std::abs(*it);
        return acc;
    }

    ComplexPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Complex> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
        return ComplexPolynomial(std::move(d));
    }

    ComplexPolynomial conjugate_coeffs() const {
        std::vector<Complex> c(coeffs_.size());
        std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](Complex x) { return std::conj(x); });
        return ComplexPolynomial(std::move(c));
    }

    ComplexPolynomial scaled(Complex s) const {
        std::vector<Complex> c(coeffs_);
        for (auto& x : c) x *= s;
        return ComplexPolynomial(std::move(c));
    }

    /// Multiplication by z^k.
    ComplexPolynomial shifted(int k) const {
        if (is_zero()) return {};
        std::vector<Complex> c(static_cast<std::size_t>(k), Complex{0.0});
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return ComplexPolynomial(std::move(c));
    }

    /// p(z + c), by repeated synthetic division (Taylor shift).
    ComplexPolynomial translated(Complex c) const {
        std::vector<Complex> a(coeffs_);
        const std::size_t m = a.size();
        for (std::size_t i = 0; i + 1 < m; ++i)
            for (std::size_t k = m - 1; k-- > i;) a[k] += c * a[k + 1];
        return ComplexPolynomial(std::move(a));
    }

    /// Synthetic division by (z - root); the remainder is discarded.
    ComplexPolynomial divided_by_linear(Complex root) const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Complex> out(coeffs_.size() - 1);
        Complex carry{0.0};
        for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
            carry = carry * root + coeffs_[k];
            out[k - 1] = carry;
        }
        return ComplexPolynomial(std::move(out));
    }

    ComplexPolynomial pow(int k) const {
        ComplexPolynomial result = constant(1.0);
        for (int i = 0; i < k; ++i) result = result * *this;
        return result;
    }

    friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
        std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{0.0});
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
        return ComplexPolynomial(std::move(c));
    }

    friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
        std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{0.0});
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
        return ComplexPolynomial(std::move(c));
    }

    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{0.0});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return ComplexPolynomial(std::move(c));
    }

    friend ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) { return p.scaled(s); }

    friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

private:
    void normalize() {
        const double cutoff = kTrimRelative * max_coeff_magnitude();
        while (!coeffs_.empty() && (coeffs_.back() == Complex{0.0} || std::abs(coeffs_.back()) < cutoff))
            coeffs_.pop_back();
    }

    std::vector<Complex> coeffs_;
};

inline ComplexPolynomial derivative(const ComplexPolynomial& p) { return p.derivative(); }
inline ComplexPolynomial conjugate_coeffs(const ComplexPolynomial& p) { return p.conjugate_coeffs(); }

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

struct RootConfig {
    double residual_tol = 1e-12;
    double cluster_radius = 1e-7;
    int max_sweeps = 200;
    double step_tol = 1e-14;
};

struct Root {
    Complex value;
    int multiplicity = 1;
};

struct RootResult {
    std::vector<Root> roots;
    /// One flag per entry of `roots`; false marks an approximation whose
    /// iteration did not settle or whose residual misses the tolerance.
    std::vector<bool> converged;
    int sweeps = 0;

    bool all_converged() const {
        return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
    }
};

namespace detail {

// Positive root of |a_n| x^n - sum_{k<n} |a_k| x^k, an upper bound on the
// moduli of all roots.
inline double cauchy_radius(std::span<const Complex> c) {
    const std::size_t n = c.size() - 1;
    const double lead = std::abs(c[n]);
    double hi = 1.0;
    for (std::size_t k = 0; k < n; ++k) hi = std::max(hi, 1.0 + std::abs(c[k]) / lead);
    // lead - sum_k |a_k| x^(k-n), increasing in x
    auto g = [&](double x) {
        const double y = 1.0 / x;
        double tail = 0.0;
        for (std::size_t k = 0; k < n; ++k) tail = (tail + std::abs(c[k])) * y;
        return lead - tail;
    };
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? hi : lo) = mid;
    }
    return hi > 0.0 ? hi : 1.0;
}

inline std::vector<Root> merge_clusters(std::vector<Complex> pts, std::vector<int> mult, double radius,
                                        std::vector<bool>* flags) {
    const std::size_t m = pts.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(pts[i] - pts[j]) < radius) parent[find(i)] = find(j);

    std::vector<Root> out;
    std::vector<bool> out_flags;
    std::vector<long> slot(m, -1);
    std::vector<Complex> sum;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(out.size());
            out.push_back({Complex{0.0}, 0});
            sum.emplace_back(0.0);
            out_flags.push_back(true);
        }
        const auto s = static_cast<std::size_t>(slot[r]);
        sum[s] += static_cast<double>(mult[i]) * pts[i];
        out[s].multiplicity += mult[i];
        if (flags) out_flags[s] = out_flags[s] && (*flags)[i];
    }
    for (std::size_t s = 0; s < out.size(); ++s) out[s].value = sum[s] / static_cast<double>(out[s].multiplicity);
    if (flags) *flags = std::move(out_flags);
    return out;
}

}  // namespace detail

/// All roots of p by Aberth-Ehrlich simultaneous iteration.
///
/// Roots at exactly zero (vanishing low-order coefficients) are split off
/// before iterating. Approximations closer than cfg.cluster_radius are merged
/// into one root with the summed multiplicity. Never throws on
/// non-convergence; see roots() for the throwing variant.
inline RootResult aberth_roots(const ComplexPolynomial& p, const RootConfig& cfg = {}) {
    if (p.is_zero() || p.degree() < 1) throw DomainError("roots: polynomial must have degree >= 1");

    auto all = p.coeffs();
    std::size_t zero_mult = 0;
    while (zero_mult < all.size() && all[zero_mult] == Complex{0.0}) ++zero_mult;
    const ComplexPolynomial reduced(std::vector<Complex>(all.begin() + static_cast<long>(zero_mult), all.end()));
    const int n = reduced.degree();

    std::vector<Complex> z(static_cast<std::size_t>(std::max(n, 0)));
    std::vector<bool> done(z.size(), false);
    RootResult result;

    if (n == 1) {
        z[0] = -reduced.coeff(0) / reduced.coeff(1);
        done[0] = true;
    } else if (n > 1) {
        const double radius = detail::cauchy_radius(reduced.coeffs());
        for (int k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / n + 0.7;
            z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double stall = (4.0 * n + 1.0) * eps;
        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            result.sweeps = sweep + 1;
            bool all_done = true;
            for (std::size_t i = 0; i < z.size(); ++i) {
                if (done[i]) continue;
                const auto [pz, dpz] = reduced.eval_with_derivative(z[i]);
                if (std::abs(pz) <= stall * reduced.magnitude_sum(std::abs(z[i]))) {
                    done[i] = true;
                    continue;
                }
                Complex sum{0.0};
                for (std::size_t j = 0; j < z.size(); ++j)
                    if (j != i) sum += 1.0 / (z[i] - z[j]);
                Complex step;
                if (dpz == Complex{0.0}) {
                    step = Complex{1e-8 * (1.0 + std::abs(z[i])), 1e-8};
                } else {
                    const Complex ratio = pz / dpz;
                    step = ratio / (1.0 - ratio * sum);
                }
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                    all_done = false;
                    continue;
                }
                z[i] -= step;
                if (std::abs(step) < cfg.step_tol * (1.0 + std::abs(z[i])))
                    done[i] = true;
                else
                    all_done = false;
            }
            if (all_done) break;
        }
    }

    // residual postcondition
    const double scale = reduced.max_coeff_magnitude();
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double bound = cfg.residual_tol * scale * std::pow(std::max(1.0, std::abs(z[i])), n);
        if (!(std::abs(reduced.eval(z[i])) <= bound)) done[i] = false;
    }

    std::vector<Complex> pts(z.begin(), z.end());
    std::vector<int> mult(pts.size(), 1);
    if (zero_mult > 0) {
        pts.emplace_back(0.0);
        mult.push_back(static_cast<int>(zero_mult));
        done.push_back(true);
    }
    result.roots = detail::merge_clusters(std::move(pts), std::move(mult), cfg.cluster_radius, &done);
    result.converged = std::move(done);
    return result;
}

/// Like aberth_roots, but raises ConvergenceFailure unless every root
/// converged.
inline std::vector<Root> roots(const ComplexPolynomial& p, const RootConfig& cfg = {}) {
    RootResult r = aberth_roots(p, cfg);
    if (!r.all_converged()) {
        std::size_t bad = 0;
        for (bool ok : r.converged) bad += ok ? 0 : 1;
        throw ConvergenceFailure("roots: " + std::to_string(bad) + " of " + std::to_string(r.roots.size()) +
                                 " approximations did not converge in " + std::to_string(r.sweeps) + " sweeps");
    }
    return std::move(r.roots);
}

}  // namespace harmonic_zeros
