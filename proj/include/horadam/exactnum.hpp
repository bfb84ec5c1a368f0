#pragma once

// Exact integers and rationals. Both are thin aliases over GMP's C++
// classes; everything above this layer only uses the functions declared here
// plus the ordinary arithmetic operators.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace horadam {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer int_gcd(const Integer& a, const Integer& b);

/// Nonnegative lcm; lcm(0, x) = 0.
Integer int_lcm(const Integer& a, const Integer& b);

/// C(n, k) via the multiplicative formula with exact division.
/// Returns 0 for k < 0 or k > n. Throws std::domain_error for n < 0.
Integer binomial(long n, long k);

/// Parses "[sign]digits[/[sign]digits]" into a canonical rational.
/// Accepts ASCII '-' / '+' and U+2212 as signs. Throws ParseError on
/// malformed text or a zero denominator.
Rational rat_parse(std::string_view text);

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& value);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

/// Integer power; exponent must be nonnegative.
Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace horadam
