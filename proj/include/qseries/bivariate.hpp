#pragma once

// Series in q whose coefficients are Laurent polynomials in two generic
// parameters x and y. Used to check decompositions "for generic x and y"
// without specialising either parameter.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace qseries {

/// Finite sum of c_ij x^i y^j with rational c_ij; zero coefficients are never stored.
class laurent_xy {
public:
    using key_type = std::pair<exp_t, exp_t>;

    laurent_xy() = default;

    static laurent_xy term(exp_t i, exp_t j, const rational& c) {
        laurent_xy p;
        p.add(i, j, c);
        return p;
    }

    void add(exp_t i, exp_t j, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    rational coeff(exp_t i, exp_t j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? rational(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<key_type, rational>& terms() const noexcept { return terms_; }

    laurent_xy& operator+=(const laurent_xy& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }

    friend laurent_xy operator+(laurent_xy a, const laurent_xy& b) { return a += b; }

    friend laurent_xy operator-(const laurent_xy& a) {
        laurent_xy r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend laurent_xy operator-(laurent_xy a, const laurent_xy& b) { return a += -b; }

    friend laurent_xy operator*(const laurent_xy& a, const laurent_xy& b) {
        laurent_xy r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    laurent_xy scaled(const rational& c) const {
        if (c == 0) return {};
        laurent_xy r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    friend bool operator==(const laurent_xy&, const laurent_xy&) = default;

private:
    std::map<key_type, rational> terms_;
};

/// Sum over k <= order of P_k(x, y) q^k, exact through q^order.
class bivariate_series {
public:
    explicit bivariate_series(exp_t order = 0) : order_(order) {}

    static bivariate_series term(exp_t i, exp_t j, exp_t k, const rational& c, exp_t order) {
        bivariate_series s(order);
        s.add_term(k, i, j, c);
        return s;
    }

    exp_t order() const noexcept { return order_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Lowest q-exponent with a nonzero coefficient; 0 for the zero series.
    exp_t min_exp() const noexcept { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    exp_t valuation() const noexcept { return coeffs_.empty() ? order_ + 1 : coeffs_.begin()->first; }

    /// Adds c x^i y^j q^k; ignored when k is past the order.
    void add_term(exp_t k, exp_t i, exp_t j, const rational& c) {
        if (k > order_ || c == 0) return;
        auto& p = coeffs_[k];
        p.add(i, j, c);
        if (p.is_zero()) coeffs_.erase(k);
    }

    void add(exp_t k, const laurent_xy& p) {
        if (k > order_) return;
        for (const auto& [key, c] : p.terms()) add_term(k, key.first, key.second, c);
    }

    laurent_xy coeff(exp_t k) const {
        if (k > order_)
            throw order_exceeded("q^" + std::to_string(k) + " requested from a bivariate series exact through q^" +
                                 std::to_string(order_));
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? laurent_xy{} : it->second;
    }

    const std::map<exp_t, laurent_xy>& coeffs() const noexcept { return coeffs_; }

    bivariate_series scaled(const rational& c) const {
        bivariate_series r(order_);
        for (const auto& [k, p] : coeffs_) r.add(k, p.scaled(c));
        return r;
    }

    friend bivariate_series operator+(const bivariate_series& a, const bivariate_series& b) {
        bivariate_series r(std::min(a.order_, b.order_));
        for (const auto& [k, p] : a.coeffs_) r.add(k, p);
        for (const auto& [k, p] : b.coeffs_) r.add(k, p);
        return r;
    }

    friend bivariate_series operator-(const bivariate_series& a, const bivariate_series& b) {
        return a + b.scaled(rational(-1));
    }

    /// Same exactness rule as the one-variable product.
    friend bivariate_series operator*(const bivariate_series& a, const bivariate_series& b) {
        bivariate_series r(std::min(a.order_ + b.valuation(), b.order_ + a.valuation()));
        for (const auto& [ka, pa] : a.coeffs_)
            for (const auto& [kb, pb] : b.coeffs_) {
                if (ka + kb > r.order_) break;
                r.add(ka + kb, pa * pb);
            }
        return r;
    }

    friend bool operator==(const bivariate_series&, const bivariate_series&) = default;

private:
    exp_t order_;
    std::map<exp_t, laurent_xy> coeffs_;
};

/// First disagreement between two bivariate series: q-exponent, x/y exponents and both coefficients.
struct xy_difference {
    exp_t q;
    exp_t x;
    exp_t y;
    rational lhs;
    rational rhs;
};

inline std::optional<xy_difference> first_difference(const bivariate_series& a, const bivariate_series& b,
                                                     exp_t order) {
    if (order > a.order() || order > b.order())
        throw order_exceeded("comparison through q^" + std::to_string(order) +
                             " exceeds a bivariate truncation order");
    auto ia = a.coeffs().begin();
    auto ib = b.coeffs().begin();
    const auto ea = a.coeffs().end();
    const auto eb = b.coeffs().end();
    static const laurent_xy zero;
    while (ia != ea || ib != eb) {
        exp_t k;
        const laurent_xy* pa = &zero;
        const laurent_xy* pb = &zero;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            k = ia->first;
            pa = &(ia++)->second;
        } else if (ia == ea || ib->first < ia->first) {
            k = ib->first;
            pb = &(ib++)->second;
        } else {
            k = ia->first;
            pa = &(ia++)->second;
            pb = &(ib++)->second;
        }
        if (k > order) break;
        if (*pa == *pb) continue;
        // smallest (i, j) in lexicographic order where they differ
        auto ta = pa->terms().begin();
        auto tb = pb->terms().begin();
        while (true) {
            if (tb == pb->terms().end() || (ta != pa->terms().end() && ta->first < tb->first))
                return xy_difference{k, ta->first.first, ta->first.second, ta->second, rational(0)};
            if (ta == pa->terms().end() || tb->first < ta->first)
                return xy_difference{k, tb->first.first, tb->first.second, rational(0), tb->second};
            if (ta->second != tb->second)
                return xy_difference{k, ta->first.first, ta->first.second, ta->second, tb->second};
            ++ta;
            ++tb;
        }
    }
    return std::nullopt;
}

inline bool eq_to_order(const bivariate_series& a, const bivariate_series& b, exp_t order) {
    return !first_difference(a, b, order).has_value();
}

} // namespace qseries
