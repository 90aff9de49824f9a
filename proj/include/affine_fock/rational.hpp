#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace affine_fock {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view s);

}  // namespace affine_fock
