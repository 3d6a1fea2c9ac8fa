#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhecke/hecke.hpp"

using namespace qhecke;

namespace {

const QField<ScalarQ> F = exact_field();

HeckeElement<ScalarQ> T(int n, std::initializer_list<int> word) {
    return hecke_word(F, n, std::vector<int>(word));
}

HeckeElement<ScalarQ> random_element(std::mt19937& rng, int n, int nterms) {
    std::uniform_int_distribution<size_t> pick(0, symmetric_group(n).size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<long> shift(-2, 2);
    HeckeElement<ScalarQ> e{n, {}};
    for (int t = 0; t < nterms; ++t) {
        e.add_term(symmetric_group(n)[pick(rng)], ScalarQ(coeff(rng)) * ScalarQ::v(shift(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("quadratic relation") {
    // T_1^2 = (q-1) T_1 + q
    auto lhs = multiply(F, T(2, {1}), T(2, {1}));
    auto rhs = scale(F.q() - ScalarQ(1), T(2, {1})) + scale(F.q(), hecke_one<ScalarQ>(2));
    CHECK(lhs == rhs);
}

TEST_CASE("lengths add") {
    auto v1 = Permutation::transposition_adjacent(3, 1);
    auto v2 = Permutation::transposition_adjacent(3, 2);
    CHECK(multiply(F, T(3, {1}), T(3, {2})) == t_basis(3, v1 * v2, ScalarQ(1)));
}

TEST_CASE("braid relations for n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
            CHECK(T(n, {i, i + 1, i}) == T(n, {i + 1, i, i + 1}));
        }
    }
}

TEST_CASE("symmetrizers") {
    auto [x1, y1] = symmetrizers(F, 1);
    CHECK(x1 == hecke_one<ScalarQ>(1));
    CHECK(y1 == hecke_one<ScalarQ>(1));

    auto [x2, y2] = symmetrizers(F, 2);
    // X_2 = (1/[2]_q)(T_e + T_1)
    auto expect_x = scale(ScalarQ(1) / q_integer(2), hecke_one<ScalarQ>(2) + T(2, {1}));
    CHECK(x2 == expect_x);
    // Y_2 = (1/(1+q^{-1}))(T_e - q^{-1} T_1)
    auto expect_y = scale(ScalarQ(1) / (ScalarQ(1) + ScalarQ::q(-1)),
                          hecke_one<ScalarQ>(2) - scale(ScalarQ::q(-1), T(2, {1})));
    CHECK(y2 == expect_y);

    // X_2^2 = X_2 by the quadratic relation
    CHECK(multiply(F, x2, x2) == x2);
    CHECK(multiply(F, y2, y2) == y2);

    for (int n = 2; n <= 4; ++n) {
        auto [x, y] = symmetrizers(F, n);
        for (int i = 1; i <= n - 1; ++i) {
            CHECK(multiply(F, T(n, {i}), x) == scale(F.q(), x));
            CHECK(multiply(F, T(n, {i}), y) == scale(-ScalarQ(1), y));
        }
    }
}

TEST_CASE("t_inverse") {
    CHECK(t_inverse(F, Permutation::identity(3)) == hecke_one<ScalarQ>(3));
    auto v1 = Permutation::transposition_adjacent(2, 1);
    auto expect = scale(ScalarQ::q(-1), T(2, {1})) -
                  scale(ScalarQ(1) - ScalarQ::q(-1), hecke_one<ScalarQ>(2));
    CHECK(t_inverse(F, v1) == expect);
    for (const auto& w : symmetric_group(4)) {
        CHECK(multiply(F, t_inverse(F, w), t_basis(4, w, ScalarQ(1))) == hecke_one<ScalarQ>(4));
    }
    // squared inverse of T_{w_2} fixes Y_2 (eigenvalue 1)
    auto [x2, y2] = symmetrizers(F, 2);
    auto tw2inv = t_inverse(F, longest_element(2));
    CHECK(multiply(F, multiply(F, tw2inv, tw2inv), y2) == y2);
}

TEST_CASE("star anti-automorphism") {
    std::mt19937 rng(99);
    auto v12 = Permutation::transposition_adjacent(3, 1) * Permutation::transposition_adjacent(3, 2);
    CHECK(star(T(3, {1})) == T(3, {1}));
    CHECK(star(t_basis(3, v12, ScalarQ(1))) == t_basis(3, v12.inverse(), ScalarQ(1)));
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_element(rng, 4, 3);
        auto b = random_element(rng, 4, 3);
        CHECK(star(star(a)) == a);
        CHECK(star(multiply(F, a, b)) == multiply(F, star(b), star(a)));
    }
}

TEST_CASE("inner product") {
    CHECK(inner_product(F, T(2, {1}), T(2, {1})) == F.q());
    CHECK(inner_product(F, hecke_one<ScalarQ>(2), T(2, {1})).is_zero());
    auto [x2, y2] = symmetrizers(F, 2);
    CHECK(inner_product(F, x2, hecke_one<ScalarQ>(2)) == ScalarQ(1) / q_integer(2));

    // <hk, g> = <h, g k*> and <h, gk> = <g* h, k>
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        auto h = random_element(rng, 3, 3);
        auto k = random_element(rng, 3, 3);
        auto g = random_element(rng, 3, 3);
        CHECK(inner_product(F, multiply(F, h, k), g) ==
              inner_product(F, h, multiply(F, g, star(k))));
        CHECK(inner_product(F, h, multiply(F, g, k)) ==
              inner_product(F, multiply(F, star(g), h), k));
    }
}

TEST_CASE("murphy operators") {
    CHECK(murphy(F, 3, 1).is_zero());
    CHECK(murphy(F, 2, 2) == scale(ScalarQ::q(-1), T(2, {1})));

    auto [x2, y2] = symmetrizers(F, 2);
    CHECK(multiply(F, murphy(F, 2, 2), x2) == x2);                        // [1]_q = 1
    CHECK(multiply(F, murphy(F, 2, 2), y2) == scale(q_integer(-1), y2));  // [-1]_q

    // pairwise commuting, and their sum is central
    for (int n = 2; n <= 5; ++n) {
        HeckeElement<ScalarQ> total{n, {}};
        for (int m = 1; m <= n; ++m) total = total + murphy(F, n, m);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                auto la = murphy(F, n, a), lb = murphy(F, n, b);
                CHECK(multiply(F, la, lb) == multiply(F, lb, la));
            }
        for (int i = 1; i <= n - 1; ++i) {
            auto ti = T(n, {i});
            CHECK(multiply(F, total, ti) == multiply(F, ti, total));
        }
    }
}

TEST_CASE("murphy spectrum annihilates H_n") {
    // prod_{|c| <= m-1} (L_m - [c]_q) = 0
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= n; ++m) {
            HeckeElement<ScalarQ> prod = hecke_one<ScalarQ>(n);
            for (long c = -(m - 1); c <= m - 1; ++c) {
                auto factor = murphy(F, n, m) - scale(F.q_int(c), hecke_one<ScalarQ>(n));
                prod = multiply(F, prod, factor);
            }
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS((void)symmetrizers(F, 7), Error);
}

TEST_CASE("numeric coefficients behave identically") {
    auto FN = numeric_field(Rational(3, 2));
    auto [x3, y3] = symmetrizers(FN, 3);
    CHECK(multiply(FN, x3, x3) == x3);
    CHECK(multiply(FN, y3, y3) == y3);
    for (int m = 2; m <= 3; ++m) {
        HeckeElement<Rational> prod = hecke_one<Rational>(3);
        for (long c = -(m - 1); c <= m - 1; ++c) {
            auto factor = murphy(FN, 3, m) - scale(FN.q_int(c), hecke_one<Rational>(3));
            prod = multiply(FN, prod, factor);
        }
        CHECK(prod.is_zero());
    }
}
