#pragma once

// JSON shapes shared by the CLI and the tests. Every top-level document
// carries "schema": 1.

#include <complex>
#include <vector>

#include <json.hpp>

#include "gallery.hpp"
#include "harmonic.hpp"
#include "topology.hpp"
#include "verify.hpp"

namespace harmonic_zeros {

inline constexpr int kReportSchema = 1;

inline nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline nlohmann::json to_json(const ClassifiedZero& z) {
    return {
        {"location", to_json(z.location)},
        {"residual", z.residual},
        {"derivative_modulus", z.derivative_modulus},
        {"sense", std::string(to_string(z.sense))},
        {"index", z.index ? nlohmann::json(*z.index) : nlohmann::json(nullptr)},
    };
}

inline nlohmann::json zero_report(const RationalFunction& r, const std::vector<ClassifiedZero>& zeros) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& z : zeros) list.push_back(to_json(z));
    return {
        {"schema", kReportSchema},
        {"rational", format_rational(r)},
        {"degree", r.degree()},
        {"zeros", list},
    };
}

inline nlohmann::json to_json(const ZeroCensus& c) {
    return {
        {"n", c.n},
        {"deg_p", c.deg_p},
        {"deg_q", c.deg_q},
        {"n_plus", c.n_plus},
        {"n_minus", c.n_minus},
        {"n_singular_flagged", c.n_singular_flagged},
        {"total", c.total()},
        {"bound_plus", c.bound_plus},
        {"bound_minus_zero", c.bound_minus_zero},
        {"bound_total", c.bound_total},
        {"verdict", std::string(to_string(c.verdict))},
    };
}

inline nlohmann::json to_json(const RegularityReport& r) {
    return {
        {"status", std::string(to_string(r.status))},
        {"margin", std::isfinite(r.margin) ? nlohmann::json(r.margin) : nlohmann::json(nullptr)},
        {"singular_band", r.singular_band},
        {"detail", r.detail},
    };
}

inline nlohmann::json to_json(const MigrationRow& m) {
    return {
        {"magnitude", m.magnitude}, {"c", to_json(m.c)},
        {"epsilon", m.epsilon},     {"matched", m.matched},
        {"unmatched", m.unmatched}, {"singular_skipped", m.singular_skipped},
        {"all_matched", m.all_matched}, {"plus_not_fewer", m.plus_not_fewer},
        {"minus_not_fewer", m.minus_not_fewer}, {"status", m.status},
    };
}

inline nlohmann::json to_json(const WindingResult& w) {
    return {
        {"value", w.value},
        {"samples_used", w.samples_used},
        {"max_step_phase", w.max_step_phase},
        {"rounding_error", w.rounding_error},
    };
}

inline nlohmann::json to_json(const ArgumentPrincipleReport& a) {
    return {
        {"winding", a.winding},
        {"index_sum", a.index_sum},
        {"enclosed_preserving", a.enclosed_preserving},
        {"enclosed_reversing", a.enclosed_reversing},
        {"enclosed_pole_order", a.enclosed_pole_order},
        {"indeterminate", a.indeterminate},
        {"consistent", a.consistent},
    };
}

}  // namespace harmonic_zeros
