#ifndef FREEVL_RATIONAL_HPP
#define FREEVL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace freevl {

/// Exact arbitrary-precision rational scalar. Always canonical: positive
/// denominator, numerator and denominator coprime.
using Rational = boost::multiprecision::mpq_rational;

/// Exact arbitrary-precision integer.
using Integer = boost::multiprecision::mpz_int;

/// num/den in canonical form. Throws std::domain_error when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" with an optional leading minus and nothing else.
/// Throws freevl::Error on any other input (including a zero denominator).
Rational rational_from_string(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// -1, 0 or +1.
int sign_of(const Rational& value);

}  // namespace freevl

#endif  // FREEVL_RATIONAL_HPP
