#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "strata/errors.hpp"

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need; everything
// downstream assumes no rounding ever happens.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

// "p/q" with q omitted when 1.  Bit-exact roundtrip with parse_rational.
inline std::string print_rational(const Rational& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rational parse_rational(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(tok));
    BigInt num(tok.substr(0, slash));
    BigInt den(tok.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational '" + tok + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational token '" + tok + "'");
  }
}

}  // namespace strata
