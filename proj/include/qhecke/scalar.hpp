#pragma once

#include <string>

#include "qhecke/intpoly.hpp"
#include "qhecke/rational.hpp"

namespace qhecke {

// Element of Q(v), v^2 = q.
//
// Canonical form: value = content * v^vshift * num(v)/den(v) where num and den
// are primitive integer polynomials with positive leading coefficient, nonzero
// constant term and gcd(num, den) = 1. Zero is content = 0, vshift = 0,
// num = den = 1. Equal values always have identical representations, so
// equality is component comparison.
//
// Arithmetic keeps Laurent values (den = 1) on a gcd-free fast path; general
// rational functions pay one polynomial gcd per normalization.
class ScalarQ {
public:
    ScalarQ() = default;                      // zero
    ScalarQ(long n) : content_(n) { norm_trivial(); }  // NOLINT(implicit)
    explicit ScalarQ(const Rational& r) : content_(r) { norm_trivial(); }
    ScalarQ(Rational content, long vshift, IntPoly num, IntPoly den);

    static ScalarQ v(long power = 1);
    static ScalarQ q(long power = 1);

    bool is_zero() const { return content_ == 0; }
    bool is_one() const;
    bool is_laurent() const { return den_.is_one(); }

    const Rational& content() const { return content_; }
    long vshift() const { return vshift_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    friend ScalarQ operator+(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator-(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator/(const ScalarQ& a, const ScalarQ& b);
    ScalarQ operator-() const;
    ScalarQ& operator+=(const ScalarQ& o) { return *this = *this + o; }
    ScalarQ& operator-=(const ScalarQ& o) { return *this = *this - o; }
    ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }
    ScalarQ& operator/=(const ScalarQ& o) { return *this = *this / o; }
    bool operator==(const ScalarQ& o) const = default;

    ScalarQ inverse() const;
    ScalarQ pow(long e) const;

    // Throws Error("DenominatorVanishes") when den(v0) = 0.
    Rational evaluate(const Rational& v0) const;

    // Canonical human-readable form: a Laurent expression in q when every
    // v-exponent is even, otherwise in v; terms ascending by exponent.
    // Non-Laurent values print as (numerator)/(denominator).
    std::string to_string() const;

private:
    void norm_trivial() {
        if (content_ == 0) *this = ScalarQ();
    }

    Rational content_{0};
    long vshift_ = 0;
    IntPoly num_ = IntPoly::one();
    IntPoly den_ = IntPoly::one();
};

// [n]_q = (q^n - 1)/(q - 1), a Laurent polynomial in q for any sign of n.
ScalarQ q_integer(long n);

// [±n]_q! = [±1]_q [±2]_q ... [±n]_q, with [0]_q! = 1.
ScalarQ q_factorial(long n);

// Exact evaluation at v = v0. Requires v0 > 0 and v0 != 1.
Rational specialize(const ScalarQ& x, const Rational& v0);

}  // namespace qhecke
