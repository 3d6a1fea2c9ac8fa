#include "qhecke/intpoly.hpp"

#include <stdexcept>

namespace qhecke {

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::one() { return IntPoly(BigInt(1)); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, BigInt(0));
    p.c_[degree] = c;
    return p;
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

int IntPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::times_int(const BigInt& k) const {
    if (k == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& x : r.c_) x *= k;
    return r;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0) return *this;
    if (valuation() < k) throw std::logic_error("shifted_down: valuation too small");
    IntPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& x : c_) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (leading() < 0) g = -g;
    IntPoly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::logic_error("divexact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::logic_error("divexact: not divisible");
    std::vector<BigInt> rem = a.c_;
    std::vector<BigInt> quot(a.c_.size() - b.c_.size() + 1, BigInt(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        BigInt& top = rem[i + b.degree()];
        if (top == 0) continue;
        if (top % b.leading() != 0) throw std::logic_error("divexact: not divisible");
        BigInt q = top / b.leading();
        quot[i] = q;
        for (size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= q * b.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::logic_error("divexact: nonzero remainder");
    return IntPoly(std::move(quot));
}

bool IntPoly::divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    std::vector<BigInt> rem = a.c_;
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        BigInt& top = rem[i + b.degree()];
        if (top == 0) continue;
        if (top % b.leading() != 0) return false;
        BigInt q = top / b.leading();
        for (size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= q * b.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    return true;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a = q*b + r; returns r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const BigInt& lb = b.leading();
    int k = a.degree() - b.degree();
    for (int i = k; i >= 0; --i) {
        BigInt c = rem[i + b.degree()];
        if (c == 0) continue;  // skipping the scale only changes an overall factor
        for (auto& x : rem) x *= lb;
        for (size_t j = 0; j < bc.size(); ++j) rem[i + j] -= c * bc[j];
    }
    rem.resize(b.degree() >= 0 ? b.degree() : 0);
    return IntPoly(std::move(rem));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + Rational(c_[i]);
    return acc;
}

}  // namespace qhecke
