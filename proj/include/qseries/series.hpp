#pragma once

// Truncated Laurent series in one variable q over an exact coefficient field.
//
// A value stores the coefficients of q^min_exp .. q^k (k <= order) densely and
// represents the series modulo q^(order+1). Every operation propagates the
// order through which its result is still exact, so no coefficient past the
// exactness boundary is ever reported.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qseries {

template <class Coeff>
class basic_series {
public:
    using coeff_type = Coeff;

    /// Zero series, exact through q^order.
    explicit basic_series(exp_t order = 0) : order_(order) {}

    /// Coefficients for q^min_exp, q^(min_exp+1), ...; entries past `order` are dropped.
    basic_series(exp_t min_exp, exp_t order, std::vector<Coeff> coeffs)
        : min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
        canonicalize();
    }

    static basic_series constant(const Coeff& c, exp_t order) { return monomial(c, 0, order); }

    static basic_series monomial(const Coeff& c, exp_t k, exp_t order) {
        return basic_series(k, order, std::vector<Coeff>{c});
    }

    /// Lowest retained exponent; 0 for the zero series.
    exp_t min_exp() const noexcept { return min_exp_; }
    /// Largest exponent through which the series is exact.
    exp_t order() const noexcept { return order_; }
    /// Exponent of the last stored (nonzero) coefficient.
    exp_t max_exp() const noexcept { return min_exp_ + static_cast<exp_t>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest exponent that can be nonzero: min_exp, or order + 1 for the zero series.
    exp_t valuation() const noexcept { return is_zero() ? order_ + 1 : min_exp_; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^k; throws order_exceeded past the exactness order.
    Coeff coeff(exp_t k) const {
        if (k > order_)
            throw order_exceeded("coefficient of q^" + std::to_string(k) +
                                 " requested from a series exact through q^" + std::to_string(order_));
        return stored(k);
    }

    /// Coefficient without the order check (zero outside the stored range).
    Coeff stored(exp_t k) const {
        if (k < min_exp_ || k > max_exp()) return Coeff(0);
        return coeffs_[static_cast<std::size_t>(k - min_exp_)];
    }

    /// Visits (exponent, coefficient) for every nonzero coefficient in increasing exponent.
    template <class F>
    void for_each_term(F&& f) const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) f(min_exp_ + static_cast<exp_t>(i), coeffs_[i]);
    }

    friend bool operator==(const basic_series&, const basic_series&) = default;

private:
    void canonicalize() {
        if (!coeffs_.empty()) {
            const exp_t keep = order_ - min_exp_ + 1;
            if (keep <= 0)
                coeffs_.clear();
            else if (static_cast<exp_t>(coeffs_.size()) > keep)
                coeffs_.resize(static_cast<std::size_t>(keep));
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c != 0; });
        min_exp_ += first - coeffs_.begin();
        coeffs_.erase(coeffs_.begin(), first);
        if (coeffs_.empty()) min_exp_ = 0;
    }

    exp_t min_exp_ = 0;
    exp_t order_ = 0;
    std::vector<Coeff> coeffs_;
};

using series = basic_series<rational>;

/// Dense scratch buffer for builders that emit terms q^k with k <= order in any order.
template <class Coeff>
class term_accumulator {
public:
    explicit term_accumulator(exp_t order) : order_(order) {}

    exp_t order() const noexcept { return order_; }

    /// Adds c q^k; terms past the order are discarded.
    void add(exp_t k, const Coeff& c) {
        if (k > order_ || c == 0) return;
        slot(k) += c;
    }

    void add(exp_t k, long c) {
        if (k > order_ || c == 0) return;
        slot(k) += c;
    }

    basic_series<Coeff> finish() && { return basic_series<Coeff>(lo_, order_, std::move(buf_)); }

private:
    Coeff& slot(exp_t k) {
        if (buf_.empty()) {
            lo_ = k;
            buf_.assign(static_cast<std::size_t>(order_ - k + 1), Coeff(0));
        } else if (k < lo_) {
            buf_.insert(buf_.begin(), static_cast<std::size_t>(lo_ - k), Coeff(0));
            lo_ = k;
        }
        return buf_[static_cast<std::size_t>(k - lo_)];
    }

    exp_t order_;
    exp_t lo_ = 0;
    std::vector<Coeff> buf_;
};

template <class C>
basic_series<C> truncate(const basic_series<C>& a, exp_t order) {
    if (order > a.order()) return a;
    return basic_series<C>(a.min_exp(), order, a.coeffs());
}

template <class C>
basic_series<C> operator+(const basic_series<C>& a, const basic_series<C>& b) {
    const exp_t order = std::min(a.order(), b.order());
    if (a.is_zero()) return truncate(b, order);
    if (b.is_zero()) return truncate(a, order);
    const exp_t lo = std::min(a.min_exp(), b.min_exp());
    const exp_t hi = std::min(order, std::max(a.max_exp(), b.max_exp()));
    if (hi < lo) return basic_series<C>(order);
    std::vector<C> out(static_cast<std::size_t>(hi - lo + 1), C(0));
    a.for_each_term([&](exp_t k, const C& c) { if (k <= hi) out[k - lo] += c; });
    b.for_each_term([&](exp_t k, const C& c) { if (k <= hi) out[k - lo] += c; });
    return basic_series<C>(lo, order, std::move(out));
}

template <class C>
basic_series<C> operator-(const basic_series<C>& a) {
    std::vector<C> out(a.coeffs());
    for (auto& c : out) c = -c;
    return basic_series<C>(a.min_exp(), a.order(), std::move(out));
}

template <class C>
basic_series<C> operator-(const basic_series<C>& a, const basic_series<C>& b) {
    return a + (-b);
}

/// Cauchy product. Exact through min(a.order + b.valuation, b.order + a.valuation).
template <class C>
basic_series<C> operator*(const basic_series<C>& a, const basic_series<C>& b) {
    const exp_t order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    if (a.is_zero() || b.is_zero()) return basic_series<C>(order);
    const exp_t lo = a.min_exp() + b.min_exp();
    const exp_t hi = std::min(order, a.max_exp() + b.max_exp());
    if (hi < lo) return basic_series<C>(order);
    std::vector<C> out(static_cast<std::size_t>(hi - lo + 1), C(0));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    const exp_t span = hi - lo;
    C tmp;
    for (exp_t i = 0; i < static_cast<exp_t>(ac.size()) && i <= span; ++i) {
        if (ac[i] == 0) continue;
        const exp_t jmax = std::min<exp_t>(static_cast<exp_t>(bc.size()) - 1, span - i);
        for (exp_t j = 0; j <= jmax; ++j) {
            if (bc[j] == 0) continue;
            tmp = ac[i] * bc[j];
            out[i + j] += tmp;
        }
    }
    return basic_series<C>(lo, order, std::move(out));
}

template <class C>
basic_series<C> scale(const basic_series<C>& a, const C& c) {
    if (c == 0) return basic_series<C>(a.order());
    std::vector<C> out(a.coeffs());
    for (auto& v : out) v *= c;
    return basic_series<C>(a.min_exp(), a.order(), std::move(out));
}

/// Multiplication by q^k; moves both min_exp and order.
template <class C>
basic_series<C> shift(const basic_series<C>& a, exp_t k) {
    if (a.is_zero()) return basic_series<C>(a.order() + k);
    return basic_series<C>(a.min_exp() + k, a.order() + k, a.coeffs());
}

/// q -> q^k for k >= 1. The result is exact through k*order + k - 1.
template <class C>
basic_series<C> subst_qpow(const basic_series<C>& a, exp_t k) {
    if (k < 1) throw parameter_error("subst_qpow needs a positive power, got " + std::to_string(k));
    const exp_t order = k * a.order() + (k - 1);
    if (a.is_zero()) return basic_series<C>(order);
    std::vector<C> out(static_cast<std::size_t>(k * (a.max_exp() - a.min_exp()) + 1), C(0));
    a.for_each_term([&](exp_t e, const C& c) { out[static_cast<std::size_t>(k * (e - a.min_exp()))] = c; });
    return basic_series<C>(k * a.min_exp(), order, std::move(out));
}

/// Multiplicative inverse by long division. For a = q^v (a_0 + ...), the result
/// is q^-v (1/a_0 + ...) exact through a.order - 2v.
template <class C>
basic_series<C> invert(const basic_series<C>& a) {
    if (a.is_zero())
        throw zero_leading_coefficient("cannot invert a series that is zero through q^" +
                                       std::to_string(a.order()));
    const exp_t v = a.min_exp();
    const exp_t len = a.order() - v + 1;
    const auto& ac = a.coeffs();
    const exp_t alen = static_cast<exp_t>(ac.size());
    const C inv0 = C(1) / ac[0];
    std::vector<C> out(static_cast<std::size_t>(len), C(0));
    out[0] = inv0;
    C acc, tmp;
    for (exp_t k = 1; k < len; ++k) {
        acc = 0;
        const exp_t jmax = std::min(k, alen - 1);
        for (exp_t j = 1; j <= jmax; ++j) {
            if (ac[j] == 0 || out[k - j] == 0) continue;
            tmp = ac[j] * out[k - j];
            acc += tmp;
        }
        out[k] = -acc * inv0;
    }
    return basic_series<C>(-v, a.order() - 2 * v, std::move(out));
}

/// a * (1 - sign q^e) for e >= 1, computed in place in O(length).
template <class C>
basic_series<C> mul_one_minus(basic_series<C> a, int sign, exp_t e) {
    if (a.is_zero()) return a;
    const exp_t hi = std::min(a.order(), a.max_exp() + e);
    std::vector<C> out(a.coeffs());
    out.resize(static_cast<std::size_t>(hi - a.min_exp() + 1), C(0));
    for (exp_t k = static_cast<exp_t>(out.size()) - 1; k >= e; --k) {
        if (out[k - e] == 0) continue;
        if (sign > 0)
            out[k] -= out[k - e];
        else
            out[k] += out[k - e];
    }
    return basic_series<C>(a.min_exp(), a.order(), std::move(out));
}

/// a / (1 - sign q^e) for e >= 1, expanding the geometric series through a.order.
template <class C>
basic_series<C> div_one_minus(basic_series<C> a, int sign, exp_t e) {
    if (a.is_zero()) return a;
    std::vector<C> out(a.coeffs());
    out.resize(static_cast<std::size_t>(a.order() - a.min_exp() + 1), C(0));
    for (exp_t k = e; k < static_cast<exp_t>(out.size()); ++k) {
        if (out[k - e] == 0) continue;
        if (sign > 0)
            out[k] += out[k - e];
        else
            out[k] -= out[k - e];
    }
    return basic_series<C>(a.min_exp(), a.order(), std::move(out));
}

/// Smallest exponent <= order at which a and b differ, if any.
template <class C>
std::optional<exp_t> first_difference(const basic_series<C>& a, const basic_series<C>& b, exp_t order) {
    if (order > a.order() || order > b.order())
        throw order_exceeded("comparison through q^" + std::to_string(order) +
                             " exceeds the exactness orders q^" + std::to_string(a.order()) +
                             " and q^" + std::to_string(b.order()));
    exp_t lo = std::min(a.is_zero() ? order + 1 : a.min_exp(), b.is_zero() ? order + 1 : b.min_exp());
    for (exp_t k = lo; k <= order; ++k)
        if (a.stored(k) != b.stored(k)) return k;
    return std::nullopt;
}

template <class C>
bool eq_to_order(const basic_series<C>& a, const basic_series<C>& b, exp_t order) {
    return !first_difference(a, b, order).has_value();
}

} // namespace qseries
