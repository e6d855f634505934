#pragma once

// The five Habiro-type families H_p^(i)(q) as nested q-hypergeometric sums
//
//   H_p(q) = sum_{s_p >= ... >= s_1 >= 0} q^{k s_p} (q^{s_p + d}; q)_{s_p + e}
//              prod_{i=1}^{p-1} q^{w(s_i)} [s_{i+1} choose s_i]_q
//
// and their Hecke-type expansions 1/(q)_inf f_{2p+1,2,3}(x, y; q).

#include <string>
#include <utility>
#include <vector>

#include "heckesums.hpp"
#include "lazy.hpp"
#include "qfunctions.hpp"
#include "series.hpp"

namespace qseries {

struct habiro_spec {
    int family;
    exp_t p;

    habiro_spec(int family_, exp_t p_) : family(family_), p(p_) {
        if (family < 1 || family > 5)
            throw parameter_error("Habiro family must be in 1..5, got " + std::to_string(family));
        if (p < 1) throw parameter_error("Habiro depth p must be positive, got " + std::to_string(p));
    }
};

namespace detail {

/// Shape of one family's summand.
struct habiro_shape {
    exp_t outer;        // q^{outer * s_p}
    exp_t poch_offset;  // (q^{s_p + poch_offset}; q)_{s_p + poch_extra}
    exp_t poch_extra;
    bool square_weight; // q^{s_i^2} instead of q^{s_i (s_i + 1)}
};

inline habiro_shape shape_of(int family) {
    switch (family) {
    case 1: return {1, 1, 1, false};
    case 2: return {1, 0, 1, true};
    case 3: return {2, 1, 1, false};
    case 4: return {1, 1, 0, false};
    default: return {1, 1, 1, true};
    }
}

} // namespace detail

/// H_p^(i)(q) from its multi-sum definition, exact through q^order.
inline series habiro_series(const habiro_spec& spec, exp_t order) {
    if (order < 0) return series(order);
    const auto shape = detail::shape_of(spec.family);
    const exp_t top = order;  // every summand has order >= s_p

    // inner[s] = sum over s_{j-1} <= s of the nested factors below level j
    std::vector<series> inner(static_cast<std::size_t>(top + 1), series::constant(rational(1), order));
    for (exp_t level = 1; level < spec.p; ++level) {
        std::vector<series> next(static_cast<std::size_t>(top + 1), series(order));
        for (exp_t s = 0; s <= top; ++s) {
            series acc(order);
            for (exp_t u = 0; u <= s; ++u) {
                const exp_t w = shape.square_weight ? u * u : u * (u + 1);
                if (w > order) break;
                const series weighted = shift(truncate(gauss_binom(s, u, order - w) * inner[u], order - w), w);
                acc = acc + weighted;
            }
            next[s] = std::move(acc);
        }
        inner = std::move(next);
    }

    series total(order);
    for (exp_t s = 0; s <= top; ++s) {
        const exp_t lead = shape.outer * s;
        if (lead > order) break;
        const series poch = poch_finite(qpow(s + shape.poch_offset), s + shape.poch_extra, order - lead);
        total = total + shift(truncate(poch * inner[s], order - lead), lead);
    }
    return total;
}

inline hecke_params habiro_hecke_params(const habiro_spec& spec) { return {2 * spec.p + 1, 2, 3}; }

/// The (x, y) monomials of each family's Hecke-type expansion.
inline std::pair<monomial, monomial> habiro_monomials(const habiro_spec& spec) {
    const exp_t p = spec.p;
    switch (spec.family) {
    case 1: return {qpow(2 * p + 1), qpow(4)};
    case 2: return {qpow(p + 1), qpow(2)};
    case 3: return {qpow(2 * p + 2), qpow(3)};
    case 4: return {qpow(2 * p + 1), qpow(2)};
    default: return {qpow(p + 1), qpow(3)};
    }
}

/// 1/(q)_inf * f_{2p+1,2,3}(x, y; q) with the family's monomials.
inline series habiro_hecke_side(const habiro_spec& spec, exp_t order) {
    const auto params = habiro_hecke_params(spec);
    const auto [x, y] = habiro_monomials(spec);
    series_builder f = [=](exp_t n) { return hecke_f_monomial(params, x, y, n); };
    series_builder inv_euler = inverse_builder([](exp_t n) { return poch_inf(qpow(1), n); });
    return product_to_order(f, inv_euler, order);
}

} // namespace qseries
