#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace qseries {

/// Exact rational in lowest terms with positive denominator (GMP keeps it canonical).
using rational = mpq_class;

/// Exponent of q, x or y.
using exp_t = std::int64_t;

/// (-1)^k for any integer k.
constexpr int parity_sign(exp_t k) noexcept { return (k & 1) ? -1 : 1; }

/// binom(n, 2) = n(n-1)/2, valid for negative n.
constexpr exp_t binom2(exp_t n) noexcept { return n * (n - 1) / 2; }

/// "num/den" with an explicit denominator, e.g. "-2/1".
inline std::string to_fraction_string(const rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Compact form: "-2" for integers, "3/4" otherwise.
inline std::string to_string(const rational& r) { return r.get_str(); }

/// Accepts "n" or "n/d" with optional sign on n; d must be nonzero.
inline rational parse_rational(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    auto is_int = [](std::string_view v, bool allow_sign) {
        if (!v.empty() && allow_sign && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
        if (v.empty()) return false;
        for (char ch : v)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
        throw parse_error("malformed rational: '" + s + "'");
    if (num.front() == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw parse_error("zero denominator: '" + s + "'");
    rational r{mpz_class(num), d};
    r.canonicalize();
    return r;
}

} // namespace qseries
