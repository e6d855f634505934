#pragma once

// Catalog of verifiable identities and the comparator that checks them.
//
// Every catalog entry is addressed by an id of the form "head:arg,arg,..."
// (see catalog_ids for the default grids) and evaluates to an
// identity_report. Reports for "habiro:" entries are experiments: they are
// emitted like any other report but never count as failures.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bivariate.hpp"
#include "habiro.hpp"
#include "heckesums.hpp"
#include "lazy.hpp"
#include "monomial.hpp"
#include "qfunctions.hpp"
#include "series.hpp"

namespace qseries {

enum class report_status { equal, mismatch, error };

inline std::string to_string(report_status s) {
    switch (s) {
    case report_status::equal: return "EQUAL";
    case report_status::mismatch: return "MISMATCH";
    default: return "ERROR";
    }
}

struct coefficient_mismatch {
    exp_t q;
    std::optional<exp_t> x;
    std::optional<exp_t> y;
    rational lhs;
    rational rhs;

    friend bool operator==(const coefficient_mismatch&, const coefficient_mismatch&) = default;
};

struct identity_report {
    std::string identity;
    exp_t order = 0;
    report_status status = report_status::error;
    bool experiment = false;
    std::optional<coefficient_mismatch> first_mismatch;
    std::optional<std::string> error_detail;

    /// True unless this is a mandatory entry that did not come out EQUAL.
    bool passes() const noexcept { return experiment || status == report_status::equal; }

    friend bool operator==(const identity_report&, const identity_report&) = default;
};

inline bool is_experiment(std::string_view id) { return id.starts_with("habiro:"); }

inline identity_report error_report(std::string id, exp_t order, std::string detail) {
    identity_report r;
    r.experiment = is_experiment(id);
    r.identity = std::move(id);
    r.order = order;
    r.status = report_status::error;
    r.error_detail = std::move(detail);
    return r;
}

inline identity_report compare_q(const series& lhs, const series& rhs, exp_t order, std::string id = {}) {
    identity_report r;
    r.experiment = is_experiment(id);
    r.identity = std::move(id);
    r.order = order;
    try {
        if (auto k = first_difference(lhs, rhs, order)) {
            r.status = report_status::mismatch;
            r.first_mismatch = coefficient_mismatch{*k, std::nullopt, std::nullopt, lhs.stored(*k), rhs.stored(*k)};
        } else {
            r.status = report_status::equal;
        }
    } catch (const order_exceeded& e) {
        r.status = report_status::error;
        r.error_detail = e.what();
    }
    return r;
}

inline identity_report compare_xy(const bivariate_series& lhs, const bivariate_series& rhs, exp_t order,
                                  std::string id = {}) {
    identity_report r;
    r.experiment = is_experiment(id);
    r.identity = std::move(id);
    r.order = order;
    try {
        if (auto d = first_difference(lhs, rhs, order)) {
            r.status = report_status::mismatch;
            r.first_mismatch = coefficient_mismatch{d->q, d->x, d->y, d->lhs, d->rhs};
        } else {
            r.status = report_status::equal;
        }
    } catch (const order_exceeded& e) {
        r.status = report_status::error;
        r.error_detail = e.what();
    }
    return r;
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline exp_t parse_int(const std::string& s, std::string_view id) {
    std::size_t used = 0;
    exp_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw unknown_identity("bad integer '" + s + "' in identity '" + std::string(id) + "'");
    return v;
}

inline monomial parse_mono(const std::string& s, std::string_view id) {
    try {
        return parse_monomial(s);
    } catch (const parse_error&) {
        throw unknown_identity("bad monomial '" + s + "' in identity '" + std::string(id) + "'");
    }
}

inline void expect_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, std::string_view id) {
    if (args.size() < lo || args.size() > hi)
        throw unknown_identity("wrong number of parameters in identity '" + std::string(id) + "'");
}

inline series euler(exp_t order) { return poch_inf(qpow(1), order); }

/// sum_j c_j q^{k_j} Theta(u_j; q^{p_j}) F(X_j; P_j), one summand of a displayed false theta expansion.
struct theta_false_term {
    int sign;
    exp_t shift;
    monomial theta_arg;
    exp_t theta_base;
    monomial false_arg;
    exp_t false_quad;
};

inline series theta_false_combination(const std::vector<theta_false_term>& terms, exp_t order) {
    series total(order);
    for (const auto& t : terms) {
        series_builder th = [=](exp_t n) { return theta_product(t.theta_arg, t.theta_base, n); };
        series_builder ft = [=](exp_t n) { return false_theta_sum(t.false_arg, t.false_quad, n); };
        total = total + shifted_builder([=](exp_t n) { return product_to_order(th, ft, n); }, t.shift,
                                        rational(t.sign))(order);
    }
    return total;
}

inline identity_report evaluate(std::string_view id, exp_t order) {
    const auto colon = id.find(':');
    const std::string head(id.substr(0, colon));
    const std::vector<std::string> args =
        colon == std::string_view::npos ? std::vector<std::string>{} : split(id.substr(colon + 1), ',');
    const std::string name(id);

    if (head == "main") {
        expect_args(args, 3, 3, id);
        const hecke_params P(parse_int(args[0], id), parse_int(args[1], id), parse_int(args[2], id));
        return compare_xy(hecke_f_bivariate(P, order), main_rhs_bivariate(P, order), order, name);
    }
    if (head == "f121") {
        const hecke_params P(1, 2, 1);
        if (args.size() == 1 && args[0] == "qq") {
            const series_builder e = euler;
            return compare_q(hecke_f_monomial(P, qpow(1), qpow(1), order), product_to_order(e, e, order), order,
                             name);
        }
        if (args.size() == 1 && args[0] == "q-q") {
            const series_builder th = [](exp_t n) { return theta_product(qpow(1, -1), 4, n); };
            const series_builder phi = phi_sixth;
            return compare_q(hecke_f_monomial(P, qpow(1), qpow(1, -1), order), product_to_order(th, phi, order),
                             order, name);
        }
        // f121:general:x,y
        const auto rest = colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);
        if (rest.starts_with("general:")) {
            const auto xy = split(rest.substr(8), ',');
            expect_args(xy, 2, 2, id);
            const monomial x = parse_mono(xy[0], id);
            const monomial y = parse_mono(xy[1], id);
            return compare_q(hecke_f_monomial(P, x, y, order), f121_rhs_monomial(x, y, order), order, name);
        }
        throw unknown_identity("unknown f121 variant in '" + name + "'");
    }
    if (head == "phi-appell") {
        expect_args(args, 0, 0, id);
        return compare_q(phi_sixth(order), scale(appell_m(qpow(1), qpow(0, -1), 3, order), rational(2)), order,
                         name);
    }
    if (head == "jtp") {
        expect_args(args, 2, 2, id);
        const monomial x = parse_mono(args[0], id);
        const exp_t p = parse_int(args[1], id);
        return compare_q(theta_jtp(x, p, order), theta_product(x, p, order), order, name);
    }
    if (head == "theta-inv") {
        expect_args(args, 1, 2, id);
        const monomial x = parse_mono(args[0], id);
        const exp_t p = args.size() > 1 ? parse_int(args[1], id) : 1;
        return compare_q(theta_product(qpow(p) / x, p, order), theta_product(x, p, order), order, name);
    }
    if (head == "theta-ell") {
        // Theta(q^{pn} x; q^p) = (-1)^n x^-n q^{-p binom(n,2)} Theta(x; q^p)
        expect_args(args, 2, 3, id);
        const monomial x = parse_mono(args[0], id);
        const exp_t n = parse_int(args[1], id);
        const exp_t p = args.size() > 2 ? parse_int(args[2], id) : 1;
        const monomial factor = qpow(-p * binom2(n), parity_sign(n)) * pow(x, -n);
        const series rhs = shifted_builder([=](exp_t k) { return theta_product(x, p, k); }, factor.qexp,
                                           rational(factor.sign))(order);
        return compare_q(theta_product(qpow(p * n) * x, p, order), rhs, order, name);
    }
    if (head == "theta-zero") {
        expect_args(args, 1, 2, id);
        const exp_t n = parse_int(args[0], id);
        const exp_t p = args.size() > 1 ? parse_int(args[1], id) : 1;
        return compare_q(theta_product(qpow(p * n), p, order), series(order), order, name);
    }
    if (head == "helping") {
        // Theta(q^{b(ar+t)} x; q^a) = (-x)^{-br} q^{-t b^2 r} q^{-a binom(br,2)} Theta(q^{bt} x; q^a)
        expect_args(args, 4, 5, id);
        const exp_t a = parse_int(args[0], id);
        const exp_t b = parse_int(args[1], id);
        const exp_t t = parse_int(args[2], id);
        const exp_t r = parse_int(args[3], id);
        const monomial x = args.size() > 4 ? parse_mono(args[4], id) : qpow(1, -1);
        if (a < 1 || b < 1) throw parameter_error("helping identity needs positive a, b");
        const monomial factor = pow(-x, -b * r) * qpow(-t * b * b * r - a * binom2(b * r));
        const monomial inner = qpow(b * t) * x;
        const series rhs = shifted_builder([=](exp_t k) { return theta_product(inner, a, k); }, factor.qexp,
                                           rational(factor.sign))(order);
        return compare_q(theta_product(qpow(b * (a * r + t)) * x, a, order), rhs, order, name);
    }
    if (head == "h12-example") {
        expect_args(args, 0, 0, id);
        // sum sg(r)(-1)^r q^{8r+15 binom(r,2)} + q sum sg(r)(-1)^r q^{13r+15 binom(r,2)}
        const series rhs = false_theta_sum(qpow(-7, -1), 15, order) +
                           shift(false_theta_sum(qpow(-2, -1), 15, order - 1), 1);
        return compare_q(habiro_hecke_side(habiro_spec(2, 1), order), rhs, order, name);
    }
    if (head == "h22-example") {
        expect_args(args, 0, 0, id);
        const std::vector<theta_false_term> bracket = {
            {1, 0, qpow(3), 5, qpow(-26, -1), 55},  {-1, 5, qpow(2), 5, qpow(-4, -1), 55},
            {1, 11, qpow(4), 5, qpow(7, -1), 55},   {1, 19, qpow(1), 5, qpow(18, -1), 55},
            {1, 0, qpow(2), 3, qpow(-16, -1), 33},  {1, 2, qpow(1), 3, qpow(-5, -1), 33},
        };
        const series_builder sum = [=](exp_t n) { return theta_false_combination(bracket, n); };
        const series rhs = scale(product_to_order(sum, inverse_builder(euler), order), rational(1, 2));
        return compare_q(habiro_hecke_side(habiro_spec(2, 2), order), rhs, order, name);
    }
    if (head == "habiro") {
        expect_args(args, 2, 2, id);
        const habiro_spec spec(static_cast<int>(parse_int(args[0], id)), parse_int(args[1], id));
        return compare_q(habiro_series(spec, order), habiro_hecke_side(spec, order), order, name);
    }
    throw unknown_identity("unknown identity '" + name + "'");
}

} // namespace detail

/// Builds both sides of a catalog identity and compares them through q^order.
/// Build failures become ERROR reports; an id outside the catalog throws unknown_identity.
inline identity_report run_identity(std::string_view id, exp_t order) {
    try {
        return detail::evaluate(id, order);
    } catch (const unknown_identity&) {
        throw;
    } catch (const std::exception& e) {
        return error_report(std::string(id), order, e.what());
    }
}

/// Monomials +-q^m for |m| <= 4, in a fixed order.
inline std::vector<monomial> monomial_grid(exp_t radius = 4) {
    std::vector<monomial> grid;
    for (exp_t m = -radius; m <= radius; ++m) {
        grid.push_back(qpow(m, 1));
        grid.push_back(qpow(m, -1));
    }
    return grid;
}

/// Pairs (x, y) at which the closed form of f_{1,2,1} has no poles or vanishing denominators.
inline std::vector<std::pair<monomial, monomial>> f121_generic_pairs() {
    return {{qpow(1, -1), qpow(1, -1)}, {qpow(1, -1), qpow(2, -1)}, {qpow(2, -1), qpow(1, -1)},
            {qpow(2, -1), qpow(3, -1)}, {qpow(1), qpow(2, -1)},     {qpow(3, -1), qpow(2)}};
}

/// Every catalog id of the default parameter grids whose text starts with `prefix`, in canonical order.
inline std::vector<std::string> catalog_ids(std::string_view prefix = {}) {
    std::vector<std::string> ids;
    auto push = [&](std::string id) {
        if (std::string_view(id).starts_with(prefix)) ids.push_back(std::move(id));
    };
    const auto s = [](auto v) { return std::to_string(v); };

    for (exp_t a = 1; a <= 5; ++a)
        for (exp_t b = 1; b <= 5; ++b)
            for (exp_t c = 1; c <= 5; ++c)
                if (b * b < a * c) push("main:" + s(a) + "," + s(b) + "," + s(c));

    push("f121:qq");
    push("f121:q-q");
    for (const auto& [x, y] : f121_generic_pairs()) push("f121:general:" + to_string(x) + "," + to_string(y));
    push("phi-appell");

    const auto grid = monomial_grid();
    for (const auto& x : grid)
        for (exp_t p = 1; p <= 5; ++p) push("jtp:" + to_string(x) + "," + s(p));
    for (const auto& x : grid)
        for (exp_t p = 1; p <= 5; ++p) push("theta-inv:" + to_string(x) + "," + s(p));
    for (const auto& x : grid)
        for (exp_t n = -4; n <= 4; ++n)
            for (exp_t p = 1; p <= 5; ++p) push("theta-ell:" + to_string(x) + "," + s(n) + "," + s(p));
    for (exp_t n = -4; n <= 4; ++n)
        for (exp_t p = 1; p <= 5; ++p) push("theta-zero:" + s(n) + "," + s(p));
    for (exp_t a = 1; a <= 3; ++a)
        for (exp_t b = 1; b <= 3; ++b)
            for (exp_t t = 0; t < a; ++t)
                for (exp_t r = -2; r <= 2; ++r)
                    for (const auto& x : {qpow(1, -1), qpow(2), qpow(-3, -1)})
                        push("helping:" + s(a) + "," + s(b) + "," + s(t) + "," + s(r) + "," + to_string(x));

    push("h12-example");
    push("h22-example");
    for (int i = 1; i <= 5; ++i)
        for (exp_t p = 1; p <= 2; ++p) push("habiro:" + s(i) + "," + s(p));
    return ids;
}

/// Runs every default-grid entry matching the prefix.
inline std::vector<identity_report> run_suite(std::string_view prefix, exp_t order) {
    std::vector<identity_report> reports;
    for (const auto& id : catalog_ids(prefix)) reports.push_back(run_identity(id, order));
    return reports;
}

} // namespace qseries
