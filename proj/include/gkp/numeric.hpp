#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace gkp {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

/// Parses "p/q", "-p/q" or an integer literal. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
/// q in {0, 1, 2, ...}
bool is_nonneg_integer(const Rational& q);
/// q in {1, 2, 3, ...}
bool is_positive_integer(const Rational& q);
/// Requires is_integer(q) and that the value fits in a long.
long to_long(const Rational& q);

/// base^e for integer e, with 0^0 = 1. Throws DomainError for 0^negative.
Rational pow_int(const Rational& base, long e);

/// Generalized binomial coefficient C(a, k) for rational a and k >= 0.
Rational binomial(const Rational& a, long k);

Integer factorial(long n);

/// Converts at the current working precision.
Real to_real(const Rational& q);

/// Working precision (decimal digits) for Real values created inside the
/// scope. The underlying default is process-wide: open scopes only outside
/// parallel regions.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

}  // namespace gkp
