#pragma once

// Brute-force zero finder for f(z) = p(z)/q(z) - conj(z), independent of the
// library: own Horner evaluation, a dense grid scan for local minima of |f|,
// then Newton with a finite-difference Jacobian on the real 2x2 system.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct GridOptions {
    double lo = -2.0;
    double hi = 2.0;
    double step = 0.01;
    double seed_threshold = 0.1;
    int newton_iterations = 100;
    double accept = 1e-10;
    double dedupe = 1e-6;
};

inline cplx horner(const std::vector<cplx>& ascending, cplx z) {
    cplx acc = 0.0;
    for (std::size_t k = ascending.size(); k-- > 0;) acc = acc * z + ascending[k];
    return acc;
}

struct Harmonic {
    std::vector<cplx> p;
    std::vector<cplx> q;
    cplx operator()(cplx z) const { return horner(p, z) / horner(q, z) - std::conj(z); }
};

inline bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline bool newton(const Harmonic& f, cplx& z, int iterations) {
    for (int it = 0; it < iterations; ++it) {
        const cplx v = f(z);
        if (!finite(v)) return false;
        if (std::abs(v) < 1e-15) return true;
        const double h = 1e-7 * (1.0 + std::abs(z));
        const cplx fx = (f(z + cplx{h, 0.0}) - f(z - cplx{h, 0.0})) / (2.0 * h);
        const cplx fy = (f(z + cplx{0.0, h}) - f(z - cplx{0.0, h})) / (2.0 * h);
        // [fx.re fy.re; fx.im fy.im] [dx dy]^T = -[v.re v.im]^T
        const double det = fx.real() * fy.imag() - fy.real() * fx.imag();
        if (det == 0.0 || !std::isfinite(det)) return false;
        const double dx = (-v.real() * fy.imag() + fy.real() * v.imag()) / det;
        const double dy = (-fx.real() * v.imag() + fx.imag() * v.real()) / det;
        const cplx next = z + cplx{dx, dy};
        if (std::abs(next - z) < 1e-15 * (1.0 + std::abs(z))) {
            z = next;
            return true;
        }
        z = next;
    }
    return true;
}

inline std::vector<cplx> zeros(const Harmonic& f, const GridOptions& opt = {}) {
    const int m = static_cast<int>(std::lround((opt.hi - opt.lo) / opt.step)) + 1;
    std::vector<double> mod(static_cast<std::size_t>(m) * m);
    auto at = [&](int i, int j) -> double& { return mod[static_cast<std::size_t>(i) * m + j]; };
    auto point = [&](int i, int j) { return cplx{opt.lo + i * opt.step, opt.lo + j * opt.step}; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const cplx v = f(point(i, j));
            at(i, j) = finite(v) ? std::abs(v) : INFINITY;
        }

    std::vector<cplx> found;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double c = at(i, j);
            if (!(c < opt.seed_threshold)) continue;
            bool minimum = true;
            for (int di = -1; di <= 1 && minimum; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const int a = i + di, b = j + dj;
                    if (a < 0 || b < 0 || a >= m || b >= m) continue;
                    if (at(a, b) < c) {
                        minimum = false;
                        break;
                    }
                }
            if (!minimum) continue;
            cplx z = point(i, j);
            if (!newton(f, z, opt.newton_iterations)) continue;
            const cplx v = f(z);
            if (!finite(v) || std::abs(v) > opt.accept * (1.0 + std::abs(z))) continue;
            bool dup = false;
            for (const cplx& w : found)
                if (std::abs(w - z) < opt.dedupe) dup = true;
            if (!dup) found.push_back(z);
        }
    return found;
}

}  // namespace oracle
