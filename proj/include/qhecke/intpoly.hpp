#pragma once

#include <vector>

#include "qhecke/rational.hpp"

namespace qhecke {

// Dense univariate polynomial over arbitrary-precision integers.
// Coefficients ascending by degree; no trailing zeros, so empty == 0.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(BigInt constant);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly one();
    static IntPoly monomial(const BigInt& c, int degree);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& coeff(int i) const;
    const BigInt& leading() const { return c_.back(); }

    // Degree of the lowest nonzero term; 0 for the zero polynomial.
    int valuation() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly times_int(const BigInt& k) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // Multiply by v^k (k >= 0).
    IntPoly shifted_up(int k) const;
    // Divide by v^k; requires valuation() >= k.
    IntPoly shifted_down(int k) const;

    // gcd of all coefficients, non-negative; 0 for the zero polynomial.
    BigInt content() const;
    // this / content, sign fixed so the leading coefficient is positive.
    IntPoly primitive_part() const;

    // Exact division; throws std::logic_error when the division is not exact.
    static IntPoly divexact(const IntPoly& a, const IntPoly& b);
    static bool divides(const IntPoly& b, const IntPoly& a);

    // Primitive gcd with positive leading coefficient (primitive PRS).
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    Rational eval(const Rational& x) const;

private:
    void trim();
    std::vector<BigInt> c_;
};

}  // namespace qhecke
