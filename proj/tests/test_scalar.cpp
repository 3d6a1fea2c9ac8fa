#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhecke/errors.hpp"
#include "qhecke/qfield.hpp"
#include "qhecke/scalar.hpp"

using namespace qhecke;

namespace {

// Small random rational function: Laurent polynomial over a Laurent polynomial.
ScalarQ random_scalar(std::mt19937& rng, bool allow_denominator = true) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<long> shift(-3, 3);
    auto poly = [&]() {
        ScalarQ p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p += ScalarQ(coeff(rng)) * ScalarQ::v(i);
        return p;
    };
    ScalarQ num = poly() * ScalarQ::v(shift(rng));
    if (!allow_denominator) return num;
    ScalarQ den;
    while (den.is_zero()) den = poly();
    return num / den;
}

}  // namespace

TEST_CASE("q_integer basics") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(1) == ScalarQ(1));
    CHECK(q_integer(2) == ScalarQ(1) + ScalarQ::q());
    // [-1]_q computed from the defining quotient (q^{-1}-1)/(q-1)
    ScalarQ q = ScalarQ::q();
    ScalarQ oracle = (q.pow(-1) - ScalarQ(1)) / (q - ScalarQ(1));
    CHECK(q_integer(-1) == oracle);
    CHECK(q_integer(-1) == -ScalarQ::q(-1));
    CHECK(q_integer(-1).to_string() == "-q^-1");
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == ScalarQ(1));
    CHECK(q_factorial(3) == q_integer(2) * q_integer(3));
    // [-2]_q! = [-1]_q [-2]_q = q^{-3}(1 + q)
    ScalarQ oracle = q_integer(-1) * q_integer(-2);
    CHECK(q_factorial(-2) == oracle);
    CHECK(oracle == ScalarQ::q(-3) * (ScalarQ(1) + ScalarQ::q()));
}

TEST_CASE("q-integer addition law and negation identity") {
    auto F = exact_field();
    for (long m = -8; m <= 8; ++m) {
        for (long n = -8; n <= 8; ++n) {
            CHECK(q_integer(m) + ScalarQ::q(m) * q_integer(n) == q_integer(m + n));
        }
    }
    for (long r = 1; r <= 8; ++r) {
        CHECK(-q_integer(-r) == ScalarQ::q(-r) * q_integer(r));
        CHECK(F.q_int(-r) == q_integer(-r));
    }
}

TEST_CASE("field laws on random elements") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 60; ++trial) {
        ScalarQ a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == ScalarQ(1));
    }
}

TEST_CASE("canonical representations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        ScalarQ a = random_scalar(rng), b = random_scalar(rng);
        ScalarQ z = a - a;
        CHECK(z.is_zero());
        CHECK(z == ScalarQ());
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a / b) * (b / a) == ScalarQ(1));
        }
    }
    // reduced fractions: (q^2-1)/(q-1) = q + 1
    ScalarQ q = ScalarQ::q();
    ScalarQ x = (q * q - ScalarQ(1)) / (q - ScalarQ(1));
    CHECK(x.is_laurent());
    CHECK(x == q + ScalarQ(1));
}

TEST_CASE("specialize") {
    Rational two(2);
    CHECK(specialize(q_integer(2), two) == Rational(5));  // q = 4
    CHECK(specialize(q_integer(0), two) == Rational(0));
    ScalarQ q = ScalarQ::q();
    ScalarQ bad = ScalarQ(1) / (q - ScalarQ(1));
    CHECK_THROWS_AS((void)specialize(bad, Rational(1)), std::invalid_argument);
    // v0 = 1 rejected before evaluation; a vanishing denominator elsewhere
    ScalarQ pole = ScalarQ(1) / (q - ScalarQ(4));
    CHECK_THROWS_AS((void)pole.evaluate(Rational(2)), Error);
    CHECK(specialize(pole, Rational(3)) == Rational(1) / Rational(5));
}

TEST_CASE("printing") {
    CHECK(ScalarQ().to_string() == "0");
    CHECK((ScalarQ::q(-2) + ScalarQ::q(-1)).to_string() == "q^-2 + q^-1");
    CHECK((ScalarQ::v() + ScalarQ(1)).to_string() == "1 + v");
    CHECK((ScalarQ(1) / (ScalarQ(1) + ScalarQ::q())).to_string() == "(1)/(1 + q)");
    CHECK((ScalarQ(Rational(3, 2)) * ScalarQ::q()).to_string() == "3/2q");
    CHECK((-ScalarQ::q(2)).to_string() == "-q^2");
}

TEST_CASE("numeric field context matches exact one under specialization") {
    auto FE = exact_field();
    auto FN = numeric_field(Rational(3, 2));
    for (long n = -6; n <= 6; ++n) {
        CHECK(FN.q_int(n) == specialize(FE.q_int(n), Rational(3, 2)));
    }
    CHECK(FN.q_fact_inv(3) == specialize(FE.q_fact_inv(3), Rational(3, 2)));
}
