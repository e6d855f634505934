#pragma once

// Hecke-type double sums
//
//   f_{a,b,c}(x, y; q) = (sum_{r,s>=0} - sum_{r,s<0}) (-1)^{r+s} x^r y^s q^{a binom(r,2) + b r s + c binom(s,2)}
//
// and the two sides of their decompositions: the false-theta expansion valid
// for D = b^2 - ac < 0, the Appell expression m_{a,b,c} for D > 0, and the
// closed form of f_{1,2,1}.
//
// Each sum is available in a formal mode (x, y generic, coefficients are
// Laurent polynomials) and in a monomial mode (x, y specialised to +-q^m). The
// enumerators bound the summation indices by the exponent of the mode in
// which the terms are used, so a monomial build never loses terms whose
// formal q-exponent lies past the order.

#include <string>
#include <utility>

#include "bivariate.hpp"
#include "lazy.hpp"
#include "monomial.hpp"
#include "qfunctions.hpp"
#include "series.hpp"
#include "window.hpp"

namespace qseries {

struct hecke_params {
    exp_t a;
    exp_t b;
    exp_t c;

    hecke_params(exp_t a_, exp_t b_, exp_t c_) : a(a_), b(b_), c(c_) {
        if (a < 1 || b < 1 || c < 1)
            throw parameter_error("a, b, c must be positive integers, got (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    }

    /// Discriminant b^2 - ac.
    exp_t discriminant() const noexcept { return b * b - a * c; }

    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }
};

namespace detail {

/// One term sign * x^xpow * y^ypow * q^qpow of a formal sum.
struct xy_term {
    exp_t qpow;
    exp_t xpow;
    exp_t ypow;
    int sign;
};

/// Enumerates the terms of f_{a,b,c} whose exponent after x -> q^mx, y -> q^my is <= order.
template <class Emit>
void hecke_terms(const hecke_params& P, exp_t mx, exp_t my, exp_t order, Emit&& emit) {
    const exp_t a = P.a, b = P.b, c = P.c;
    struct quadrant {
        exp_t lo, hi;
        int sign;
    };
    for (const quadrant Q : {quadrant{0, no_upper_limit, 1}, quadrant{no_lower_limit, -1, -1}}) {
        auto row = [&](exp_t r) { return a * binom2(r) + r * mx; };
        auto col = [&](exp_t s) { return c * binom2(s) + s * my; };
        // b r s >= 0 inside a quadrant, so row(r) + min col bounds every term of row r
        const exp_t col_min = convex_min(col, Q.lo, Q.hi);
        const auto rows = convex_window(row, order - col_min, Q.lo, Q.hi);
        if (!rows) continue;
        for (exp_t r = rows->lo; r <= rows->hi; ++r) {
            auto full = [&](exp_t s) { return row(r) + b * r * s + col(s); };
            const auto cols = convex_window(full, order, Q.lo, Q.hi);
            if (!cols) continue;
            for (exp_t s = cols->lo; s <= cols->hi; ++s)
                emit(xy_term{a * binom2(r) + b * r * s + c * binom2(s), r, s, Q.sign * parity_sign(r + s)});
        }
    }
}

/// Enumerates the first t-sum of the D < 0 decomposition (without the overall 1/2):
///   sum_{t=0}^{a-1} (-y)^t q^{c binom(t,2)} Theta(q^{bt} x; q^a)
///       * sum_r sg(r) (q^{L_t} (-y)^a / (-x)^b)^r q^{-aD binom(r+1,2)},
///   L_t = a binom(b+1,2) - c binom(a+1,2) - tD,
/// with the theta expanded by its bilateral sum. The second t-sum is the same
/// enumeration with (a, x) and (c, y) exchanged.
template <class Emit>
void false_theta_half_terms(exp_t a, exp_t b, exp_t c, exp_t mx, exp_t my, exp_t order, Emit&& emit) {
    const exp_t D = b * b - a * c;
    for (exp_t t = 0; t < a; ++t) {
        const exp_t lead = c * binom2(t) + t * my;
        const exp_t L = a * binom2(b + 1) - c * binom2(a + 1) - t * D;
        // theta index n carries x^n; false index r carries x^{-br} y^{ar}
        auto theta_exp = [&](exp_t n) { return a * binom2(n) + n * (b * t + mx); };
        auto false_exp = [&](exp_t r) { return -a * D * binom2(r + 1) + r * (L - b * mx + a * my); };
        const exp_t false_min = convex_min(false_exp);
        const auto ns = convex_window(theta_exp, order - lead - false_min);
        if (!ns) continue;
        for (exp_t n = ns->lo; n <= ns->hi; ++n) {
            const auto rs = convex_window(false_exp, order - lead - theta_exp(n));
            if (!rs) continue;
            for (exp_t r = rs->lo; r <= rs->hi; ++r) {
                const exp_t qpow = c * binom2(t) + a * binom2(n) + b * t * n + r * L - a * D * binom2(r + 1);
                const int sign = parity_sign(t + n + (a + b) * r) * (r >= 0 ? 1 : -1);
                emit(xy_term{qpow, n - b * r, t + a * r, sign});
            }
        }
    }
}

template <class Emit>
void false_theta_rhs_terms(const hecke_params& P, exp_t mx, exp_t my, exp_t order, Emit&& emit) {
    if (P.discriminant() >= 0)
        throw parameter_error("the false theta decomposition needs b^2 - ac < 0, got " + P.to_string());
    false_theta_half_terms(P.a, P.b, P.c, mx, my, order, emit);
    false_theta_half_terms(P.c, P.b, P.a, my, mx, order,
                           [&](const xy_term& t) { emit(xy_term{t.qpow, t.ypow, t.xpow, t.sign}); });
}

inline bivariate_series collect_formal(auto&& enumerate, exp_t order) {
    bivariate_series out(order);
    enumerate([&](const xy_term& t) { out.add_term(t.qpow, t.xpow, t.ypow, rational(t.sign)); });
    return out;
}

inline series collect_monomial(auto&& enumerate, monomial x, monomial y, exp_t order) {
    term_accumulator<rational> acc(order);
    enumerate([&](const xy_term& t) {
        acc.add(t.qpow + t.xpow * x.qexp + t.ypow * y.qexp,
                static_cast<long>(t.sign * x.sign_pow(t.xpow) * y.sign_pow(t.ypow)));
    });
    return std::move(acc).finish();
}

} // namespace detail

/// f_{a,b,c}(x, y; q) with x, y generic, exact through q^order. Any positive (a, b, c).
inline bivariate_series hecke_f_bivariate(const hecke_params& P, exp_t order) {
    return detail::collect_formal([&](auto&& emit) { detail::hecke_terms(P, 0, 0, order, emit); }, order);
}

/// f_{a,b,c}(x, y; q) at monomial x, y.
inline series hecke_f_monomial(const hecke_params& P, monomial x, monomial y, exp_t order) {
    return detail::collect_monomial([&](auto&& emit) { detail::hecke_terms(P, x.qexp, y.qexp, order, emit); }, x,
                                    y, order);
}

/// Right-hand side of the false theta decomposition of f_{a,b,c} (D < 0), x, y generic.
inline bivariate_series main_rhs_bivariate(const hecke_params& P, exp_t order) {
    auto sum = detail::collect_formal(
        [&](auto&& emit) { detail::false_theta_rhs_terms(P, 0, 0, order, emit); }, order);
    return sum.scaled(rational(1, 2));
}

/// Right-hand side of the false theta decomposition of f_{a,b,c} (D < 0) at monomial x, y.
inline series main_rhs_monomial(const hecke_params& P, monomial x, monomial y, exp_t order) {
    auto sum = detail::collect_monomial(
        [&](auto&& emit) { detail::false_theta_rhs_terms(P, x.qexp, y.qexp, order, emit); }, x, y, order);
    return scale(sum, rational(1, 2));
}

namespace detail {

/// sum_{t=0}^{a-1} (-y)^t q^{c binom(t,2)} Theta(q^{bt} x; q^a) m(-q^{L_t} (-y)^a / (-x)^b, z; q^{aD}).
inline series appell_half(exp_t a, exp_t b, exp_t c, monomial x, monomial y, monomial z, exp_t order) {
    const exp_t D = b * b - a * c;
    series total(order);
    for (exp_t t = 0; t < a; ++t) {
        const monomial pre = pow(-y, t) * qpow(c * binom2(t));
        const monomial theta_arg = qpow(b * t) * x;
        const exp_t L = a * binom2(b + 1) - c * binom2(a + 1) - t * D;
        const monomial appell_arg = -(qpow(L) * pow(-y, a) / pow(-x, b));
        series_builder theta = [=](exp_t n) { return theta_jtp(theta_arg, a, n); };
        series_builder appell = [=](exp_t n) { return appell_m(appell_arg, z, a * D, n); };
        const series prod = product_to_order(theta, appell, order - pre.qexp);
        total = total + scale(shift(prod, pre.qexp), rational(pre.sign));
    }
    return total;
}

} // namespace detail

/// Appell function expression m_{a,b,c}(x, y, z1, z0; q) for D > 0 at monomial arguments.
inline series mabc_monomial(const hecke_params& P, monomial x, monomial y, monomial z1, monomial z0,
                            exp_t order) {
    if (P.discriminant() <= 0)
        throw parameter_error("m_{a,b,c} needs b^2 - ac > 0, got " + P.to_string());
    return detail::appell_half(P.a, P.b, P.c, x, y, z0, order) +
           detail::appell_half(P.c, P.b, P.a, y, x, z1, order);
}

/// Closed form of f_{1,2,1}(x, y; q):
///   Theta(y;q) m(q^2 x/y^2, -1; q^3) + Theta(x;q) m(q^2 y/x^2, -1; q^3)
///   - y (q^3;q^3)_inf^3 Theta(-x/y;q) Theta(q^2 xy;q^3) / (Theta(-1;q^3) Theta(-q y^2/x;q^3) Theta(-q x^2/y;q^3))
inline series f121_rhs_monomial(monomial x, monomial y, exp_t order) {
    const monomial minus_one = qpow(0, -1);
    auto theta = [](monomial arg, exp_t p) -> series_builder {
        return [=](exp_t n) { return theta_jtp(arg, p, n); };
    };
    auto inverse_theta = [&](monomial arg, exp_t p) {
        if (theta_is_zero(arg, p))
            throw theta_vanishes("Theta(" + to_string(arg) + "; q^" + std::to_string(p) + ") vanishes");
        return inverse_builder(theta(arg, p));
    };
    auto appell = [](monomial u, exp_t p) -> series_builder {
        return [=](exp_t n) { return appell_m(u, qpow(0, -1), p, n); };
    };

    const monomial u1 = qpow(2) * x / pow(y, 2);
    const monomial u2 = qpow(2) * y / pow(x, 2);
    const series first = product_to_order(theta(y, 1), appell(u1, 3), order);
    const series second = product_to_order(theta(x, 1), appell(u2, 3), order);

    const series_builder euler3 = [](exp_t n) { return poch_inf(qpow(3), n, 3); };
    const series correction = product_to_order(
        {euler3, euler3, euler3, theta(-(x / y), 1), theta(qpow(2) * x * y, 3), inverse_theta(minus_one, 3),
         inverse_theta(-(qpow(1) * pow(y, 2) / x), 3), inverse_theta(-(qpow(1) * pow(x, 2) / y), 3)},
        order - y.qexp);
    return first + second - scale(shift(correction, y.qexp), rational(y.sign));
}

} // namespace qseries
