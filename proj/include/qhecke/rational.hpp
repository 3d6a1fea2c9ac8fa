#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace qhecke {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "p" or "p/q", canonical (no spaces, reduced, q > 0).
std::string to_string(const Rational& r);

// Accepts "p", "p/q", optional leading '-'.
Rational parse_rational(const std::string& s);

}  // namespace qhecke
