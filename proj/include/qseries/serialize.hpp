#pragma once

// Text and JSON renderings of series and identity reports.
//
// JSON series:  {"min_exp": int, "trunc_order": int, "coeffs": [[k, "num/den"], ...]}
// JSON report:  {"identity": str, "order": int, "status": str, "experiment": bool,
//                "first_mismatch": {"q": int, "x": int|null, "y": int|null,
//                                   "lhs": "num/den", "rhs": "num/den"} | null}
// Coefficients are always exact fraction strings, never floats; zero
// coefficients are omitted and k is ascending.

#include <sstream>
#include <string>

#include <json.hpp>

#include "harness.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace qseries {

inline nlohmann::json to_json(const series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    s.for_each_term([&](exp_t k, const rational& c) { coeffs.push_back({k, to_fraction_string(c)}); });
    return {{"min_exp", s.min_exp()}, {"trunc_order", s.order()}, {"coeffs", std::move(coeffs)}};
}

/// Inverse of to_json; throws parse_error on malformed documents.
inline series series_from_json(const nlohmann::json& j) {
    try {
        const exp_t order = j.at("trunc_order").get<exp_t>();
        term_accumulator<rational> acc(order);
        exp_t last = 0;
        bool first = true;
        for (const auto& entry : j.at("coeffs")) {
            if (!entry.is_array() || entry.size() != 2) throw parse_error("coefficient entry must be [k, \"num/den\"]");
            const exp_t k = entry[0].get<exp_t>();
            if (k > order) throw parse_error("coefficient exponent past trunc_order");
            if (!first && k <= last) throw parse_error("coefficient exponents must be strictly ascending");
            acc.add(k, parse_rational(entry[1].get<std::string>()));
            last = k;
            first = false;
        }
        return std::move(acc).finish();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed series JSON: ") + e.what());
    }
}

inline nlohmann::json to_json(const identity_report& r) {
    nlohmann::json mismatch = nullptr;
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        mismatch = {{"q", m.q},
                    {"x", m.x ? nlohmann::json(*m.x) : nlohmann::json(nullptr)},
                    {"y", m.y ? nlohmann::json(*m.y) : nlohmann::json(nullptr)},
                    {"lhs", to_fraction_string(m.lhs)},
                    {"rhs", to_fraction_string(m.rhs)}};
    }
    nlohmann::json j = {{"identity", r.identity},
                        {"order", r.order},
                        {"status", to_string(r.status)},
                        {"experiment", r.experiment},
                        {"first_mismatch", std::move(mismatch)}};
    if (r.error_detail) j["error"] = *r.error_detail;
    return j;
}

/// "c q^k" terms in increasing k, e.g. "1 q^0 - 2 q^2 + 1/2 q^5 + O(q^21)".
inline std::string to_text(const series& s) {
    std::ostringstream out;
    bool first = true;
    s.for_each_term([&](exp_t k, const rational& c) {
        if (first)
            out << to_string(c);
        else
            out << (c < 0 ? " - " : " + ") << to_string(rational(abs(c)));
        out << " q^" << k;
        first = false;
    });
    if (first) out << "0";
    out << " + O(q^" << s.order() + 1 << ")";
    return out.str();
}

inline std::string to_text(const identity_report& r) {
    std::ostringstream out;
    out << r.identity << "  " << to_string(r.status) << "  order=" << r.order;
    if (r.experiment) out << "  [experiment]";
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        out << "  first mismatch at q^" << m.q;
        if (m.x && m.y) out << " x^" << *m.x << " y^" << *m.y;
        out << ": lhs=" << to_string(m.lhs) << " rhs=" << to_string(m.rhs);
    }
    if (r.error_detail) out << "  (" << *r.error_detail << ")";
    return out.str();
}

} // namespace qseries
