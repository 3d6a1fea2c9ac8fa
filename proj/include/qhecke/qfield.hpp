#pragma once

#include "qhecke/errors.hpp"
#include "qhecke/rational.hpp"
#include "qhecke/scalar.hpp"

namespace qhecke {

// Arithmetic context shared by everything downstream of the coefficient
// field. K is ScalarQ in exact mode or Rational in numeric mode (v pinned to
// a fixed rational v0); q is always v^2.
template <class K>
struct QField {
    K v;
    int degree_cap = 6;

    K zero() const { return K(0); }
    K one() const { return K(1); }
    K q() const { return v * v; }

    K v_pow(long e) const {
        K base = e >= 0 ? v : one() / v;
        unsigned long k = e >= 0 ? e : -e;
        K acc = one();
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    K q_pow(long e) const { return v_pow(2 * e); }

    // [n]_q = 1 + q + ... + q^{n-1}; [-m]_q = -q^{-m} [m]_q.
    K q_int(long n) const {
        if (n == 0) return zero();
        if (n > 0) {
            K acc = zero();
            K p = one();
            const K qq = q();
            for (long k = 0; k < n; ++k) {
                acc = acc + p;
                p = p * qq;
            }
            return acc;
        }
        return zero() - q_pow(n) * q_int(-n);
    }

    // [±n]_q! = [±1]_q [±2]_q ... [±n]_q.
    K q_fact(long n) const {
        K acc = one();
        const long step = n >= 0 ? 1 : -1;
        for (long k = step; k != n + step; k += step) acc = acc * q_int(k);
        return acc;
    }

    // [n]_{1/q}! = q^{-n(n-1)/2} [n]_q!.
    K q_fact_inv(long n) const { return q_pow(-n * (n - 1) / 2) * q_fact(n); }

    void check_degree(int n) const {
        if (n > degree_cap)
            throw cap_exceeded("degree " + std::to_string(n) + " exceeds cap " +
                               std::to_string(degree_cap));
    }
};

inline QField<ScalarQ> exact_field(int degree_cap = 6) {
    return QField<ScalarQ>{ScalarQ::v(), degree_cap};
}

inline QField<Rational> numeric_field(const Rational& v0, int degree_cap = 7) {
    if (v0 <= 0 || v0 == 1)
        throw Error("ParseError", "numeric mode requires v0 > 0 and v0 != 1");
    return QField<Rational>{v0, degree_cap};
}

inline bool scalar_is_zero(const ScalarQ& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Rational& x) { return x == 0; }

}  // namespace qhecke
