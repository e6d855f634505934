#include <catch_amalgamated.hpp>

#include <qseries/harness.hpp>
#include <qseries/heckesums.hpp>

#include "oracle.hpp"

using namespace qseries;

namespace {

bivariate_series formal_oracle(long a, long b, long c, exp_t order) {
    bivariate_series s(order);
    for (const auto& [key, coeff] : oracle::hecke_box_formal(a, b, c, order, 2 * order + 4)) {
        const auto [k, i, j] = key;
        s.add_term(k, i, j, rational(static_cast<long>(coeff)));
    }
    return s;
}

std::vector<monomial> small_grid() {
    std::vector<monomial> g;
    for (exp_t m = 0; m <= 3; ++m) {
        g.push_back(qpow(m));
        g.push_back(qpow(m, -1));
    }
    return g;
}

} // namespace

TEST_CASE("parameters", "[hecke]") {
    CHECK(hecke_params(1, 1, 2).discriminant() == -1);
    CHECK(hecke_params(1, 2, 1).discriminant() == 3);
    CHECK_THROWS_AS(hecke_params(0, 1, 1), parameter_error);
    CHECK_THROWS_AS(hecke_params(1, -1, 1), parameter_error);
    CHECK_THROWS_AS(main_rhs_bivariate(hecke_params(1, 2, 1), 10), parameter_error);
    CHECK_THROWS_AS(main_rhs_monomial(hecke_params(1, 1, 1), qpow(1), qpow(1), 10), parameter_error);
    CHECK_THROWS_AS(mabc_monomial(hecke_params(1, 1, 2), qpow(1), qpow(1), qpow(0, -1), qpow(0, -1), 10),
                    parameter_error);
}

TEST_CASE("monomial double sums against a box enumeration", "[hecke]") {
    const exp_t N = 30;
    for (const auto& [a, b, c] : {std::tuple{1, 1, 2}, std::tuple{3, 2, 3}, std::tuple{1, 2, 1}, std::tuple{2, 3, 1},
                                  std::tuple{5, 1, 5}})
        for (const monomial x : small_grid())
            for (const monomial y : small_grid()) {
                const auto box = oracle::hecke_box(a, b, c, x.sign, x.qexp, y.sign, y.qexp, N, 20);
                REQUIRE(hecke_f_monomial(hecke_params(a, b, c), x, y, N) == oracle::to_series(box, N));
            }
}

TEST_CASE("formal double sums against a box enumeration", "[hecke]") {
    for (const auto& [a, b, c] : {std::tuple{1, 1, 2}, std::tuple{3, 2, 3}, std::tuple{1, 2, 1}, std::tuple{2, 2, 5}})
        REQUIRE(hecke_f_bivariate(hecke_params(a, b, c), 12) == formal_oracle(a, b, c, 12));

    // through q^4 the (3,2,3) sum has no contribution from the negative quadrant
    const auto f = hecke_f_bivariate(hecke_params(3, 2, 3), 4);
    CHECK(f.coeff(4).is_zero());
    CHECK(f.coeff(2) == laurent_xy::term(1, 1, rational(1)));
    CHECK(f.coeff(3) == laurent_xy::term(2, 0, rational(1)) + laurent_xy::term(0, 2, rational(1)));
    CHECK(hecke_f_bivariate(hecke_params(3, 2, 3), 8).coeff(8) == laurent_xy::term(-1, -1, rational(-1)));
}

TEST_CASE("constant term of the formal sum", "[hecke]") {
    for (exp_t a = 1; a <= 3; ++a)
        for (exp_t b = 1; b <= 3; ++b)
            for (exp_t c = 1; c <= 3; ++c) {
                const auto f = hecke_f_bivariate(hecke_params(a, b, c), 6);
                REQUIRE(f.coeff(0) == laurent_xy::term(0, 0, rational(1)) - laurent_xy::term(1, 0, rational(1)) -
                                          laurent_xy::term(0, 1, rational(1)));
                REQUIRE(hecke_f_monomial(hecke_params(a, b, c), qpow(1), qpow(1), 6).coeff(0) == 1);
            }
}

TEST_CASE("mirror symmetry", "[hecke][property]") {
    for (exp_t a = 1; a <= 3; ++a)
        for (exp_t b = 1; b <= 3; ++b)
            for (exp_t c = 1; c <= 3; ++c)
                for (const monomial x : small_grid())
                    for (const monomial y : {qpow(1), qpow(2, -1)})
                        REQUIRE(hecke_f_monomial(hecke_params(a, b, c), x, y, 40) ==
                                hecke_f_monomial(hecke_params(c, b, a), y, x, 40));
}

TEST_CASE("false theta decomposition holds formally for every D < 0 with entries up to 5", "[hecke][property]") {
    int checked = 0;
    for (exp_t a = 1; a <= 5; ++a)
        for (exp_t b = 1; b <= 5; ++b)
            for (exp_t c = 1; c <= 5; ++c) {
                const hecke_params P(a, b, c);
                if (P.discriminant() >= 0) continue;
                INFO(P.to_string());
                REQUIRE(eq_to_order(hecke_f_bivariate(P, 40), main_rhs_bivariate(P, 40), 40));
                ++checked;
            }
    CHECK(checked == 54);
}

TEST_CASE("false theta decomposition at monomial arguments", "[hecke][property]") {
    for (const auto& [a, b, c] : {std::tuple{1, 1, 2}, std::tuple{2, 1, 1}, std::tuple{3, 2, 3}, std::tuple{2, 1, 4}})
        for (const monomial x : small_grid())
            for (const monomial y : small_grid()) {
                const hecke_params P(a, b, c);
                INFO(P.to_string() << " x=" << to_string(x) << " y=" << to_string(y));
                REQUIRE(main_rhs_monomial(P, x, y, 60) == hecke_f_monomial(P, x, y, 60));
            }
}

TEST_CASE("closed form of f_{1,2,1}", "[hecke]") {
    const hecke_params P(1, 2, 1);
    CHECK(f121_rhs_monomial(qpow(1), qpow(1), 60) == hecke_f_monomial(P, qpow(1), qpow(1), 60));
    CHECK(f121_rhs_monomial(qpow(1), qpow(1, -1), 40) == hecke_f_monomial(P, qpow(1), qpow(1, -1), 40));
    for (const auto& [x, y] : f121_generic_pairs()) {
        INFO(to_string(x) << ", " << to_string(y));
        REQUIRE(f121_rhs_monomial(x, y, 40) == hecke_f_monomial(P, x, y, 40));
    }
}

TEST_CASE("Appell expression m_{a,b,c}", "[hecke]") {
    const hecke_params P(1, 2, 1);
    const monomial minus_one = qpow(0, -1);
    // with a = c = 1 each half is one theta times one Appell function
    for (const auto& [x, y] : f121_generic_pairs()) {
        const exp_t N = 30;
        auto half = [&](monomial u, monomial v) {
            series_builder th = [=](exp_t n) { return theta_product(u, 1, n); };
            series_builder ap = [=](exp_t n) { return appell_m(qpow(2) * v / pow(u, 2), minus_one, 3, n); };
            return product_to_order(th, ap, N);
        };
        INFO(to_string(x) << ", " << to_string(y));
        REQUIRE(mabc_monomial(P, x, y, minus_one, minus_one, N) == half(x, y) + half(y, x));
    }
    // both thetas vanish at x = y = q
    CHECK(mabc_monomial(P, qpow(1), qpow(1), minus_one, minus_one, 30).is_zero());

    // swapping (x, z0) with (y, z1) is the mirror image
    const hecke_params Q(1, 3, 2);
    const monomial x = qpow(1, -1), y = qpow(2, -1), z0 = qpow(1, -1), z1 = qpow(0, -1);
    CHECK(mabc_monomial(Q, x, y, z1, z0, 30) == mabc_monomial(hecke_params(2, 3, 1), y, x, z0, z1, 30));
}
