#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works on plain std::map polynomials with machine integers and shares no code
// with the library's series kernels or index windows.

#include <map>
#include <tuple>
#include <vector>

#include <qseries/series.hpp>

namespace oracle {

using poly = std::map<long, long long>;

inline void add_to(poly& p, long k, long long c, long order) {
    if (k > order || c == 0) return;
    p[k] += c;
    if (p[k] == 0) p.erase(k);
}

inline poly mul(const poly& a, const poly& b, long order) {
    poly r;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) add_to(r, i + j, x * y, order);
    return r;
}

inline poly one() { return {{0, 1}}; }

/// 1 + c q^k
inline poly binomial(long k, long long c) {
    poly p{{0, 1}};
    p[k] += c;
    if (p[k] == 0) p.erase(k);
    return p;
}

/// prod_{i=1}^{order} (1 - q^i), multiplied out factor by factor.
inline poly euler_product(long order) {
    poly r = one();
    for (long i = 1; i <= order; ++i) r = mul(r, binomial(i, -1), order);
    return r;
}

/// Gaussian binomial by the Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
inline poly pascal_binom(long n, long k) {
    if (k < 0 || k > n) return {};
    std::vector<std::vector<poly>> t(n + 1, std::vector<poly>(n + 1));
    for (long m = 0; m <= n; ++m) {
        t[m][0] = one();
        t[m][m] = one();
        for (long j = 1; j < m; ++j) {
            poly p = t[m - 1][j - 1];
            for (const auto& [e, c] : t[m - 1][j]) add_to(p, e + j, c, 1L << 30);
            t[m][j] = p;
        }
    }
    return t[n][k];
}

inline long binom2(long n) { return n * (n - 1) / 2; }
inline long long sgn_pow(int sign, long k) { return (sign < 0 && (k % 2 != 0)) ? -1 : 1; }

/// f_{a,b,c}(sx q^mx, sy q^my; q) summed over the box |r|, |s| <= box.
inline poly hecke_box(long a, long b, long c, int sx, long mx, int sy, long my, long order, long box) {
    poly r;
    for (long i = -box; i <= box; ++i)
        for (long j = -box; j <= box; ++j) {
            int quad = (i >= 0 && j >= 0) ? 1 : (i < 0 && j < 0) ? -1 : 0;
            if (!quad) continue;
            const long e = a * binom2(i) + b * i * j + c * binom2(j) + i * mx + j * my;
            const long long sign = quad * (((i + j) % 2 == 0) ? 1 : -1) * sgn_pow(sx, i) * sgn_pow(sy, j);
            add_to(r, e, sign, order);
        }
    return r;
}

/// Formal f_{a,b,c}(x, y; q) over a box: key (q, x, y).
inline std::map<std::tuple<long, long, long>, long long> hecke_box_formal(long a, long b, long c, long order,
                                                                           long box) {
    std::map<std::tuple<long, long, long>, long long> r;
    for (long i = -box; i <= box; ++i)
        for (long j = -box; j <= box; ++j) {
            int quad = (i >= 0 && j >= 0) ? 1 : (i < 0 && j < 0) ? -1 : 0;
            if (!quad) continue;
            const long e = a * binom2(i) + b * i * j + c * binom2(j);
            if (e > order) continue;
            auto& slot = r[{e, i, j}];
            slot += quad * (((i + j) % 2 == 0) ? 1 : -1);
            if (slot == 0) r.erase({e, i, j});
        }
    return r;
}

/// Partition numbers p(0..order) by counting with parts 1..order.
inline std::vector<long long> partition_numbers(long order) {
    std::vector<long long> p(order + 1, 0);
    p[0] = 1;
    for (long part = 1; part <= order; ++part)
        for (long n = part; n <= order; ++n) p[n] += p[n - part];
    return p;
}

/// (q^start; q)_len as a polynomial.
inline poly poch(long start, long len, long order) {
    poly r = one();
    for (long i = 0; i < len; ++i) r = mul(r, binomial(start + i, -1), order);
    return r;
}

/// H_p^(family)(q) by enumerating every chain s_p >= ... >= s_1 >= 0 with s_p <= order.
inline poly habiro_chains(int family, long p, long order) {
    const long outer = family == 3 ? 2 : 1;
    const long offset = family == 2 ? 0 : 1;
    const long extra = family == 4 ? 0 : 1;
    const bool square = family == 2 || family == 5;
    poly total;
    std::vector<long> chain(p, 0);
    // chain[p-1] = s_p, chain[0] = s_1
    auto visit = [&](auto&& self, long level, long upper) -> void {
        if (level < 0) {
            const long sp = chain[p - 1];
            poly term = poch(sp + offset, sp + extra, order);
            poly lead;
            add_to(lead, outer * sp, 1, order);
            term = mul(term, lead, order);
            for (long i = 0; i + 1 < p; ++i) {
                const long si = chain[i];
                poly w;
                add_to(w, square ? si * si : si * (si + 1), 1, order);
                term = mul(term, mul(w, pascal_binom(chain[i + 1], si), order), order);
            }
            for (const auto& [e, c] : term) add_to(total, e, c, order);
            return;
        }
        for (long s = 0; s <= upper; ++s) {
            chain[level] = s;
            self(self, level - 1, s);
        }
    };
    visit(visit, p - 1, order);
    return total;
}

/// Converts to a library series exact through `order`.
inline qseries::series to_series(const poly& p, long order) {
    qseries::term_accumulator<qseries::rational> acc(order);
    for (const auto& [e, c] : p) acc.add(e, qseries::rational(static_cast<long>(c)));
    return std::move(acc).finish();
}

} // namespace oracle
