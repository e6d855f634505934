#pragma once

// Products and quotients of series whose required input orders depend on
// valuations that are only known after the inputs are built.
//
// A factor is passed as a builder: a callable returning the factor exact
// through a requested order. Products re-request inputs until the exactness
// rule of the Cauchy product covers the target order.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <vector>

#include "series.hpp"

namespace qseries {

/// Returns a series exact through (at least) the requested order.
using series_builder = std::function<series(exp_t)>;

/// a * b exact through `order`.
inline series product_to_order(const series_builder& a, const series_builder& b, exp_t order) {
    exp_t na = order;
    exp_t nb = order;
    series sa = a(na);
    series sb = b(nb);
    for (;;) {
        const exp_t need_a = order - sb.valuation();
        const exp_t need_b = order - sa.valuation();
        bool again = false;
        if (need_a > na) {
            na = need_a;
            sa = a(na);
            again = true;
        }
        if (need_b > nb) {
            nb = need_b;
            sb = b(nb);
            again = true;
        }
        if (!again) break;
    }
    return truncate(sa * sb, order);
}

inline series product_to_order(std::vector<series_builder> factors, exp_t order) {
    if (factors.empty()) return series::constant(rational(1), order);
    series_builder acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        series_builder next = factors[i];
        acc = [acc, next](exp_t n) { return product_to_order(acc, next, n); };
    }
    return acc(order);
}

/// 1/a exact through `order`.
///
/// A factor that is zero through every order tried up to order + max_gap
/// raises zero_leading_coefficient.
inline series inverse_to_order(const series_builder& a, exp_t order, exp_t max_gap = 4096) {
    exp_t n = order;
    series sa = a(n);
    exp_t step = 8;
    while (sa.is_zero()) {
        if (n - order >= max_gap)
            throw zero_leading_coefficient("cannot invert a series that is zero through q^" + std::to_string(n));
        n += step;
        step *= 2;
        sa = a(n);
    }
    // invert() is exact through a.order - 2v
    const exp_t need = order + 2 * sa.min_exp();
    if (need > sa.order()) sa = a(need);
    return truncate(invert(sa), order);
}

inline series_builder inverse_builder(series_builder a) {
    return [a = std::move(a)](exp_t n) { return inverse_to_order(a, n); };
}

/// c q^k times a builder's series, exact through `order`.
inline series_builder shifted_builder(series_builder a, exp_t k, rational c = rational(1)) {
    return [a = std::move(a), k, c](exp_t n) { return scale(shift(a(n - k), k), c); };
}

} // namespace qseries
