#pragma once

// Index windows for sums whose q-exponent is a convex function of the index.
//
// Every bilateral sum in this library has a quadratic exponent in its summation
// index, so the set of indices whose exponent stays below a bound is an
// interval. The interval is found by walking to the minimiser and then
// extending outward until the exponent escapes the bound.

#include <algorithm>
#include <limits>
#include <optional>

#include "rational.hpp"

namespace qseries {

struct index_window {
    exp_t lo;
    exp_t hi;
};

inline constexpr exp_t no_lower_limit = std::numeric_limits<exp_t>::min() / 4;
inline constexpr exp_t no_upper_limit = std::numeric_limits<exp_t>::max() / 4;

/// Minimiser of a convex integer function on [lo, hi] (the interval must be nonempty).
template <class F>
exp_t convex_argmin(F&& f, exp_t lo = no_lower_limit, exp_t hi = no_upper_limit) {
    exp_t k = std::clamp<exp_t>(0, lo, hi);
    auto fk = f(k);
    if (k < hi && f(k + 1) < fk) {
        while (k < hi) {
            auto next = f(k + 1);
            if (!(next < fk)) break;
            ++k;
            fk = next;
        }
    } else {
        while (k > lo) {
            auto next = f(k - 1);
            if (!(next < fk)) break;
            --k;
            fk = next;
        }
    }
    return k;
}

/// Indices k in [lo, hi] with f(k) <= bound, for convex f; empty when none qualify.
template <class F>
std::optional<index_window> convex_window(F&& f, exp_t bound, exp_t lo = no_lower_limit,
                                          exp_t hi = no_upper_limit) {
    if (lo > hi) return std::nullopt;
    const exp_t k = convex_argmin(f, lo, hi);
    if (f(k) > bound) return std::nullopt;
    index_window w{k, k};
    while (w.lo > lo && f(w.lo - 1) <= bound) --w.lo;
    while (w.hi < hi && f(w.hi + 1) <= bound) ++w.hi;
    return w;
}

/// min of a convex integer function over [lo, hi].
template <class F>
exp_t convex_min(F&& f, exp_t lo = no_lower_limit, exp_t hi = no_upper_limit) {
    return f(convex_argmin(f, lo, hi));
}

} // namespace qseries
