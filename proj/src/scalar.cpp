#include "qhecke/scalar.hpp"

#include <sstream>
#include <stdexcept>

#include "qhecke/errors.hpp"

namespace qhecke {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw Error("ParseError", "bad rational: " + s);
    }
}

ScalarQ::ScalarQ(Rational content, long vshift, IntPoly num, IntPoly den) {
    if (den.is_zero()) throw std::logic_error("ScalarQ: zero denominator");
    if (content == 0 || num.is_zero()) return;  // canonical zero
    vshift += num.valuation() - den.valuation();
    num = num.shifted_down(num.valuation());
    den = den.shifted_down(den.valuation());
    BigInt cn = num.content(), cd = den.content();
    if (num.leading() < 0) cn = -cn;
    if (den.leading() < 0) cd = -cd;
    content *= Rational(cn) / Rational(cd);
    num = num.primitive_part();
    den = den.primitive_part();
    if (!num.is_one() && !den.is_one()) {
        IntPoly g = IntPoly::gcd(num, den);
        if (!g.is_one()) {
            num = IntPoly::divexact(num, g);
            den = IntPoly::divexact(den, g);
        }
    }
    content_ = std::move(content);
    vshift_ = vshift;
    num_ = std::move(num);
    den_ = std::move(den);
}

ScalarQ ScalarQ::v(long power) {
    ScalarQ r(1);
    r.vshift_ = power;
    return r;
}

ScalarQ ScalarQ::q(long power) { return v(2 * power); }

bool ScalarQ::is_one() const {
    return content_ == 1 && vshift_ == 0 && num_.is_one() && den_.is_one();
}

ScalarQ ScalarQ::operator-() const {
    ScalarQ r(*this);
    r.content_ = -r.content_;
    return r;
}

ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
    if (a.is_zero() || b.is_zero()) return ScalarQ();
    Rational content = a.content_ * b.content_;
    long shift = a.vshift_ + b.vshift_;
    if (a.is_laurent() && b.is_laurent()) {
        ScalarQ r;
        r.content_ = std::move(content);
        r.vshift_ = shift;
        r.num_ = a.num_ * b.num_;
        // product of primitives is primitive; leading sign stays positive
        return r;
    }
    IntPoly n1 = a.num_, d2 = b.den_;
    IntPoly g1 = IntPoly::gcd(n1, d2);
    if (!g1.is_one()) {
        n1 = IntPoly::divexact(n1, g1);
        d2 = IntPoly::divexact(d2, g1);
    }
    IntPoly n2 = b.num_, d1 = a.den_;
    IntPoly g2 = IntPoly::gcd(n2, d1);
    if (!g2.is_one()) {
        n2 = IntPoly::divexact(n2, g2);
        d1 = IntPoly::divexact(d1, g2);
    }
    ScalarQ r;
    r.content_ = std::move(content);
    r.vshift_ = shift;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    return r;
}

ScalarQ operator+(const ScalarQ& a, const ScalarQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Put contents over a common integer denominator so the polynomial part
    // stays over Z.
    const BigInt da = denominator(a.content_), db = denominator(b.content_);
    const BigInt g = boost::multiprecision::gcd(da, db);
    const BigInt ma = db / g, mb = da / g;  // a scaled by ma, b scaled by mb
    const BigInt na = numerator(a.content_) * ma, nb = numerator(b.content_) * mb;
    const long shift = std::min(a.vshift_, b.vshift_);
    IntPoly pa = a.num_.times_int(na).shifted_up(static_cast<int>(a.vshift_ - shift));
    IntPoly pb = b.num_.times_int(nb).shifted_up(static_cast<int>(b.vshift_ - shift));
    Rational common_content(BigInt(1), da * ma);
    if (a.is_laurent() && b.is_laurent()) {
        return ScalarQ(common_content, shift, pa + pb, IntPoly::one());
    }
    if (a.den_ == b.den_) {
        return ScalarQ(common_content, shift, pa + pb, a.den_);
    }
    IntPoly gd = IntPoly::gcd(a.den_, b.den_);
    IntPoly db_red = IntPoly::divexact(b.den_, gd);
    IntPoly da_red = IntPoly::divexact(a.den_, gd);
    return ScalarQ(common_content, shift, pa * db_red + pb * da_red, a.den_ * db_red);
}

ScalarQ operator-(const ScalarQ& a, const ScalarQ& b) { return a + (-b); }

ScalarQ ScalarQ::inverse() const {
    if (is_zero()) throw std::logic_error("ScalarQ: inverse of zero");
    ScalarQ r;
    r.content_ = 1 / content_;
    r.vshift_ = -vshift_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

ScalarQ operator/(const ScalarQ& a, const ScalarQ& b) { return a * b.inverse(); }

ScalarQ ScalarQ::pow(long e) const {
    if (e == 0) return ScalarQ(1);
    ScalarQ base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? e : -e;
    ScalarQ acc(1);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rational ScalarQ::evaluate(const Rational& v0) const {
    if (is_zero()) return Rational(0);
    Rational d = den_.eval(v0);
    if (d == 0) throw Error("DenominatorVanishes", "denominator vanishes at v0 = " + v0.str());
    Rational p(1);
    Rational base = vshift_ >= 0 ? v0 : 1 / v0;
    for (long i = 0, n = vshift_ >= 0 ? vshift_ : -vshift_; i < n; ++i) p *= base;
    return content_ * p * num_.eval(v0) / d;
}

namespace {

void print_term(std::ostringstream& out, bool first, const Rational& coeff, long vexp, bool use_q) {
    Rational c = coeff;
    if (first) {
        if (c < 0) {
            out << "-";
            c = -c;
        }
    } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    const long e = use_q ? vexp / 2 : vexp;
    const char* sym = use_q ? "q" : "v";
    if (e == 0) {
        out << c.str();
    } else {
        if (c != 1) out << c.str();
        out << sym;
        if (e != 1) out << "^" << e;
    }
}

void print_laurent(std::ostringstream& out, const Rational& content, long shift, const IntPoly& p,
                   bool use_q) {
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        print_term(out, first, content * Rational(p.coeff(i)), shift + i, use_q);
        first = false;
    }
}

bool all_even(long shift, const IntPoly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0 && (shift + i) % 2 != 0) return false;
    return true;
}

}  // namespace

std::string ScalarQ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    const bool use_q = all_even(vshift_, num_) && all_even(0, den_);
    if (is_laurent()) {
        print_laurent(out, content_, vshift_, num_, use_q);
        return out.str();
    }
    out << "(";
    print_laurent(out, content_, vshift_, num_, use_q);
    out << ")/(";
    print_laurent(out, Rational(1), 0, den_, use_q);
    out << ")";
    return out.str();
}

ScalarQ q_integer(long n) {
    if (n == 0) return ScalarQ();
    if (n > 0) {
        std::vector<BigInt> c(static_cast<size_t>(2 * n - 1), BigInt(0));
        for (long k = 0; k < n; ++k) c[static_cast<size_t>(2 * k)] = 1;
        return ScalarQ(Rational(1), 0, IntPoly(std::move(c)), IntPoly::one());
    }
    // [−m]_q = −q^{−m} [m]_q
    ScalarQ pos = q_integer(-n);
    return -(ScalarQ::q(n) * pos);
}

ScalarQ q_factorial(long n) {
    ScalarQ acc(1);
    const long step = n >= 0 ? 1 : -1;
    for (long k = step; k != n + step; k += step) acc = acc * q_integer(k);
    return acc;
}

Rational specialize(const ScalarQ& x, const Rational& v0) {
    if (v0 <= 0 || v0 == 1) throw std::invalid_argument("specialize: v0 must be positive and != 1");
    return x.evaluate(v0);
}

}  // namespace qhecke
