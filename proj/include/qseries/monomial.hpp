#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace qseries {

/// The value sign * q^qexp, used to specialise the generic parameters x, y, z.
struct monomial {
    int sign = 1;
    exp_t qexp = 0;

    friend constexpr monomial operator*(monomial a, monomial b) noexcept {
        return {a.sign * b.sign, a.qexp + b.qexp};
    }
    friend constexpr monomial operator/(monomial a, monomial b) noexcept {
        return {a.sign * b.sign, a.qexp - b.qexp};
    }
    friend constexpr monomial operator-(monomial a) noexcept { return {-a.sign, a.qexp}; }
    friend constexpr bool operator==(monomial, monomial) = default;

    /// Sign of m^k, i.e. sign^k.
    constexpr int sign_pow(exp_t k) const noexcept { return sign > 0 ? 1 : parity_sign(k); }
};

constexpr monomial qpow(exp_t k, int sign = 1) noexcept { return {sign, k}; }

constexpr monomial pow(monomial m, exp_t k) noexcept { return {m.sign_pow(k), m.qexp * k}; }

/// Literal grammar: optional sign, then "q^" and an integer, e.g. "q^2", "-q^7", "q^-1".
inline monomial parse_monomial(std::string_view text) {
    monomial m;
    std::string_view s = text;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        m.sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }
    if (s.size() < 3 || s[0] != 'q' || s[1] != '^')
        throw parse_error("monomial literal must look like [-]q^<int>: '" + std::string(text) + "'");
    s.remove_prefix(2);
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 15)
        throw parse_error("bad exponent in monomial literal: '" + std::string(text) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad exponent in monomial literal: '" + std::string(text) + "'");
    m.qexp = std::stoll(std::string(s));
    return m;
}

inline std::string to_string(monomial m) {
    return std::string(m.sign < 0 ? "-" : "") + "q^" + std::to_string(m.qexp);
}

} // namespace qseries
