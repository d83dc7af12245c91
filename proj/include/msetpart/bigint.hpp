#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace msetpart {

// All arithmetic in this library is exact. Counts overflow 64 bits early
// (the four-fold sequence passes 5.8e19 by its tenth term), so everything
// runs on arbitrary-precision integers, and coefficients are rationals
// because operator terms carry 1/m! factors that only cancel at the end.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Boundary conversion for values exposed as counts. A surviving
// denominator means an operator was compiled wrong, so this is a hard
// error rather than a rounding.
inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) {
    throw std::domain_error("expected integral value, got " + q.str());
  }
  return numerator(q);
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace msetpart
