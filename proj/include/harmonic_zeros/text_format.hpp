#pragma once

// Text form of rational functions:
//
//   p: c0, c1, ..., cn ; q: d0, d1, ..., dm
//
// Coefficients are listed in ascending powers. Complex literals take the
// forms `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`). Whitespace is ignored.
// The `; q: ...` part may be omitted, meaning q = 1.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace harmonic_zeros {

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline double parse_real(std::string_view s, std::string_view context) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("invalid number '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

}  // namespace detail

inline Complex parse_complex(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() != 'i') return {detail::parse_real(s, text), 0.0};

    const std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [&](std::string_view part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return detail::parse_real(part, text);
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {detail::parse_real(std::string_view(body).substr(0, split), text),
            imag_of(std::string_view(body).substr(split))};
}

/// Shortest round-trip decimal form; negative zero prints as "0".
inline std::string format_real(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

inline std::string format_complex(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) return format_real(re);
    std::string imag_part = (std::abs(im) == 1.0) ? std::string{} : format_real(std::abs(im));
    if (re == 0.0) return (im < 0 ? "-" : "") + imag_part + "i";
    return format_real(re) + (im < 0 ? "-" : "+") + imag_part + "i";
}

inline ComplexPolynomial parse_coefficients(std::string_view list) {
    std::vector<Complex> coeffs;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string_view item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
        if (detail::strip_spaces(item).empty()) throw ParseError("empty coefficient in '" + std::string(list) + "'");
        coeffs.push_back(parse_complex(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ComplexPolynomial(std::move(coeffs));
}

inline RationalFunction parse_rational(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.rfind("p:", 0) != 0) throw ParseError("rational spec must start with 'p:'");
    const std::size_t semi = s.find(';');
    const std::string p_part = s.substr(2, semi == std::string::npos ? std::string::npos : semi - 2);
    ComplexPolynomial q = ComplexPolynomial::constant(1.0);
    if (semi != std::string::npos) {
        const std::string rest = s.substr(semi + 1);
        if (rest.rfind("q:", 0) != 0) throw ParseError("expected 'q:' after ';'");
        q = parse_coefficients(rest.substr(2));
    }
    ComplexPolynomial p = parse_coefficients(p_part);
    if (q.is_zero()) throw ParseError("denominator is identically zero");
    return {std::move(p), std::move(q)};
}

inline std::string format_coefficients(const ComplexPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ",";
        out += format_complex(p.coeffs()[k]);
    }
    return out;
}

inline std::string format_rational(const RationalFunction& r) {
    return "p: " + format_coefficients(r.numerator()) + " ; q: " + format_coefficients(r.denominator());
}

}  // namespace harmonic_zeros
