#pragma once

// q-Pochhammer symbols, Gaussian binomials, theta functions, the false theta
// building block, Appell functions at monomial arguments and the sixth-order
// mock theta function phi(q), each expanded as an exact truncated series.
//
// Conventions:
//   (x; q^p)_n    = prod_{i=0}^{n-1} (1 - x q^{p i})
//   Theta(x; q^p) = (x; q^p)_inf (q^p/x; q^p)_inf (q^p; q^p)_inf
//                 = sum_n (-1)^n q^{p binom(n,2)} x^n
//   F(X; P)       = sum_r sg(r) X^r q^{P binom(r+1,2)},  sg(r) = 1 for r >= 0, -1 otherwise
//   m(x, z; q^p)  = Theta(z; q^p)^-1 sum_r (-1)^r q^{p binom(r,2)} z^r / (1 - q^{p(r-1)} x z)

#include <optional>
#include <span>
#include <vector>

#include "lazy.hpp"
#include "monomial.hpp"
#include "series.hpp"
#include "window.hpp"

namespace qseries {

/// Factors 1 - sign q^{first + step*i} for i = 0, 1, ... (count of them, or all when count is empty).
struct binomial_run {
    int sign;
    exp_t first;
    exp_t step;
    std::optional<exp_t> count;
};

namespace detail {

using int_series = basic_series<mpz_class>;

inline series to_rational(const int_series& s) {
    std::vector<rational> out;
    out.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) out.emplace_back(c);
    return series(s.min_exp(), s.order(), std::move(out));
}

/// Product of all factors of the given runs, exact through `order`. Factors
/// with a negative exponent e are rewritten as -sign q^e (1 - sign q^-e).
inline series product_of_runs(std::span<const binomial_run> runs, exp_t order) {
    exp_t total_shift = 0;
    int sign = 1;
    unsigned twos = 0;
    std::vector<std::pair<int, exp_t>> positive;

    auto visit_nonpositive = [&](const binomial_run& run, exp_t i) -> bool {
        const exp_t e = run.first + run.step * i;
        if (e > 0) return false;
        if (e == 0) {
            if (run.sign > 0) return true;  // a factor 1 - 1
            ++twos;
        } else {
            total_shift += e;
            sign *= -run.sign;
            positive.emplace_back(run.sign, -e);
        }
        return false;
    };

    for (const auto& run : runs) {
        if (run.step <= 0 && !run.count)
            throw parameter_error("an infinite product needs a positive step");
        const exp_t n = run.count.value_or(0);
        if (run.count) {
            for (exp_t i = 0; i < n; ++i)
                if (visit_nonpositive(run, i)) return series(order);
        } else {
            for (exp_t i = 0; run.first + run.step * i <= 0; ++i)
                if (visit_nonpositive(run, i)) return series(order);
        }
    }

    // the remaining product must be exact through order - total_shift
    const exp_t inner = order - total_shift;
    if (inner < 0) return series(order);
    for (const auto& run : runs) {
        for (exp_t i = 0;; ++i) {
            if (run.count && i >= *run.count) break;
            const exp_t e = run.first + run.step * i;
            if (e > inner) {
                if (run.step >= 0) break;
                continue;
            }
            if (e > 0) positive.emplace_back(run.sign, e);
        }
    }

    int_series acc = int_series::constant(mpz_class(1), inner);
    for (const auto& [s, e] : positive)
        if (e <= inner) acc = mul_one_minus(std::move(acc), s, e);
    mpz_class factor = sign;
    factor <<= twos;
    return shift(to_rational(scale(acc, factor)), total_shift);
}

} // namespace detail

/// (x; q^base)_n.
inline series poch_finite(monomial x, exp_t n, exp_t order, exp_t base = 1) {
    const binomial_run run{x.sign, x.qexp, base, n < 0 ? 0 : n};
    return detail::product_of_runs(std::span(&run, 1), order);
}

/// (x; q^base)_inf. Finitely many factors with a nonpositive exponent are allowed.
inline series poch_inf(monomial x, exp_t order, exp_t base = 1) {
    if (base < 1) throw parameter_error("poch_inf needs a positive base power");
    const binomial_run run{x.sign, x.qexp, base, std::nullopt};
    return detail::product_of_runs(std::span(&run, 1), order);
}

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n.
inline series gauss_binom(exp_t n, exp_t k, exp_t order) {
    if (k < 0 || k > n) return series(order);
    k = std::min(k, n - k);
    if (order < 0) return series(order);
    // prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i); the quotient is a polynomial,
    // so dividing a truncated numerator stays exact.
    detail::int_series acc = detail::int_series::constant(mpz_class(1), order);
    for (exp_t i = 1; i <= k; ++i)
        if (n - k + i <= order) acc = mul_one_minus(std::move(acc), 1, n - k + i);
    for (exp_t i = 1; i <= k; ++i)
        if (i <= order) acc = div_one_minus(std::move(acc), 1, i);
    return detail::to_rational(acc);
}

/// True iff Theta(x; q^p) is identically zero, i.e. x = q^{p n} for an integer n.
constexpr bool theta_is_zero(monomial x, exp_t p) noexcept { return x.sign > 0 && x.qexp % p == 0; }

/// Theta(x; q^p) from the bilateral (Jacobi triple product) sum.
inline series theta_jtp(monomial x, exp_t p, exp_t order) {
    if (p < 1) throw parameter_error("theta base power must be positive");
    auto exponent = [&](exp_t n) { return p * binom2(n) + n * x.qexp; };
    term_accumulator<rational> acc(order);
    if (auto w = convex_window(exponent, order))
        for (exp_t n = w->lo; n <= w->hi; ++n) acc.add(exponent(n), static_cast<long>(parity_sign(n) * x.sign_pow(n)));
    return std::move(acc).finish();
}

/// Theta(x; q^p) from its product form (x)_inf (q^p/x)_inf (q^p)_inf in base q^p.
inline series theta_product(monomial x, exp_t p, exp_t order) {
    if (p < 1) throw parameter_error("theta base power must be positive");
    const binomial_run runs[] = {
        {x.sign, x.qexp, p, std::nullopt},
        {x.sign, p - x.qexp, p, std::nullopt},
        {1, p, p, std::nullopt},
    };
    return detail::product_of_runs(runs, order);
}

/// False theta building block sum_r sg(r) X^r q^{P binom(r+1,2)}.
inline series false_theta_sum(monomial X, exp_t P, exp_t order) {
    if (P < 1) throw parameter_error("false theta quadratic coefficient must be positive");
    auto exponent = [&](exp_t r) { return P * binom2(r + 1) + r * X.qexp; };
    term_accumulator<rational> acc(order);
    if (auto w = convex_window(exponent, order))
        for (exp_t r = w->lo; r <= w->hi; ++r)
            acc.add(exponent(r), static_cast<long>((r >= 0 ? 1 : -1) * X.sign_pow(r)));
    return std::move(acc).finish();
}

/// Throws appell_pole when 1 - q^{p(r-1)} x z = 0 for some integer r.
inline void check_appell_poles(monomial x, monomial z, exp_t p) {
    const exp_t shift0 = x.qexp + z.qexp;
    if (x.sign * z.sign > 0 && shift0 % p == 0)
        throw appell_pole("Appell denominator 1 - q^" + std::to_string(p) + "(r-1) x z vanishes at r = " +
                          std::to_string(1 - shift0 / p));
}

/// The bilateral numerator sum of m(x, z; q^p), before division by Theta(z; q^p).
inline series appell_numerator(monomial x, monomial z, exp_t p, exp_t order) {
    check_appell_poles(x, z, p);
    const int sigma = x.sign * z.sign;
    const exp_t shift0 = x.qexp + z.qexp;
    auto denom_exp = [&](exp_t r) { return p * (r - 1) + shift0; };
    // lowest exponent contributed by index r; convex as a sum of convex pieces
    auto lowest = [&](exp_t r) {
        const exp_t e = denom_exp(r);
        return p * binom2(r) + r * z.qexp + (e < 0 ? -e : 0);
    };
    term_accumulator<rational> acc(order);
    const auto w = convex_window(lowest, order);
    if (!w) return std::move(acc).finish();
    const rational half(1, 2);
    for (exp_t r = w->lo; r <= w->hi; ++r) {
        const exp_t base = p * binom2(r) + r * z.qexp;
        const int lead = parity_sign(r) * z.sign_pow(r);
        const exp_t e = denom_exp(r);
        if (e == 0) {
            // sigma = -1: 1/(1+1)
            acc.add(base, rational(lead) * half);
        } else if (e > 0) {
            // sum_{k>=0} (sigma q^e)^k
            int s = lead;
            for (exp_t k = base; k <= order; k += e, s *= sigma) acc.add(k, static_cast<long>(s));
        } else {
            // 1/(1-w) = -sum_{k>=1} w^-k with w^-1 = sigma q^{-e}
            int s = -lead * sigma;
            for (exp_t k = base - e; k <= order; k -= e, s *= sigma) acc.add(k, static_cast<long>(s));
        }
    }
    return std::move(acc).finish();
}

/// Appell function m(x, z; q^p) at monomial arguments.
inline series appell_m(monomial x, monomial z, exp_t p, exp_t order) {
    if (p < 1) throw parameter_error("Appell base power must be positive");
    if (theta_is_zero(z, p))
        throw theta_vanishes("Theta(z; q^" + std::to_string(p) + ") vanishes at z = " + to_string(z));
    check_appell_poles(x, z, p);
    series_builder num = [=](exp_t n) { return appell_numerator(x, z, p, n); };
    series_builder inv = inverse_builder([=](exp_t n) { return theta_jtp(z, p, n); });
    return product_to_order(num, inv, order);
}

/// Sixth-order mock theta function phi(q) = sum_{n>=0} (-1)^n q^{n^2} (q;q^2)_n / (-q;q)_{2n}.
inline series phi_sixth(exp_t order) {
    series total(order);
    for (exp_t n = 0; n * n <= order; ++n) {
        const exp_t inner = order - n * n;
        const series num = poch_finite(qpow(1), n, inner, 2);
        const series den = poch_finite(qpow(1, -1), 2 * n, inner);
        series term = shift(truncate(num * invert(den), inner), n * n);
        total = total + (n % 2 ? -term : term);
    }
    return total;
}

} // namespace qseries
