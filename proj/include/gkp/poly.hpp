#pragma once

#include <string>
#include <vector>

#include "gkp/numeric.hpp"

namespace gkp {

/// Dense univariate polynomial with exact rational coefficients; index is
/// the degree. The leading coefficient is nonzero unless the polynomial is 0.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Zero beyond the stored range.
  Rational coeff(int i) const;

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;

  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly&) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace gkp
