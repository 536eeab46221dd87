#include "freevl/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "freevl/errors.hpp"

namespace freevl {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  // The mpq (mpz, mpz) constructor canonicalizes: sign moves to the
  // numerator and the fraction is reduced.
  return Rational(num, den);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    has_den = true;
  }
  if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
    throw Error("malformed rational literal: \"" + std::string(text) + "\"");
  }
  Integer num{std::string(num_part)};
  Integer den = has_den ? Integer(std::string(den_part)) : Integer(1);
  if (den == 0) {
    throw Error("rational literal with zero denominator: \"" +
                std::string(text) + "\"");
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

int sign_of(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

}  // namespace freevl
