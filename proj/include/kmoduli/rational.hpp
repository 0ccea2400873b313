#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace kmoduli {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "p", "p/q" or "-p/q" into a canonical rational (lowest terms,
// positive denominator). Throws std::invalid_argument on malformed input
// or a zero denominator. All arithmetic downstream stays canonical; this
// is the only place raw text enters.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& value);

// Exact floor/sign helpers used by root isolation.
int sign(const Rational& value);

}  // namespace kmoduli
