#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "gkp/numeric.hpp"
#include "gkp/params.hpp"
#include "gkp/poly.hpp"
#include "gkp/series.hpp"

namespace gkp {

/// sum_i coeff_i * v^{exponent_i} + log_coeff * log v, where v is X for
/// Type I and x for Types II and III. Zero coefficients are not stored.
struct GenTerm {
  Rational exponent;
  Rational coeff;
  bool operator==(const GenTerm&) const = default;
};

struct GenSeries {
  std::vector<GenTerm> terms;  // strictly increasing exponents
  Rational log_coeff;
  int trunc_order = 0;  // number of summation indices k generated

  bool operator==(const GenSeries&) const = default;
};

/// The generalized inverse series for Types I-III using summation indices
/// k = 0..order-1. Throws NotApplicable for Type IV.
GenSeries g_inverse(const ParamTuple& p, int order);

/// Type I power part sum_{k in Z_0 minus {r}} sigma^k C(-1-r'+r, k) X^{k-r}/(k-r)
/// over k = 0..order-1 (no log term). g_inverse adds the log term to it.
GenSeries type_i_power_series(const TypeIDerived& d, int order);

/// Evaluates the truncated series at v > 0 (current Real precision).
Real evaluate(const GenSeries& g, const Real& v);

/// Taylor coefficients of g(v0 + t) - g(v0) through t^M (current Real
/// precision). The constant term is exactly zero.
TruncSeries<Real> shifted_difference(const GenSeries& g, const Real& v0, int M);

/// Same expansion with the number of summation indices doubled until two
/// successive results agree to the working precision. `make(order)`
/// regenerates the series.
template <typename Make>
TruncSeries<Real> converged_difference(Make make, const Real& v0, int M);

enum class SpecialCase {
  S3_rp_plus1_eq_r,
  S1_r_eq_minus1,
  R1R1,
  Neuwirth_rp0,
  NuEulerian,
  NuWard,
  II_alpha_eq_minus_beta,
  II_alphap0,
  III_ap_eq_bp,
  III_alpha0,
  III_ap0,
  TypeIV,
  None,
};

inline constexpr std::array<SpecialCase, 12> kAllSpecialCases = {
    SpecialCase::S3_rp_plus1_eq_r, SpecialCase::S1_r_eq_minus1, SpecialCase::R1R1,
    SpecialCase::Neuwirth_rp0,     SpecialCase::NuEulerian,     SpecialCase::NuWard,
    SpecialCase::II_alpha_eq_minus_beta, SpecialCase::II_alphap0,
    SpecialCase::III_ap_eq_bp,     SpecialCase::III_alpha0,     SpecialCase::III_ap0,
    SpecialCase::TypeIV};

std::string_view to_string(SpecialCase c);
SpecialCase parse_special_case(std::string_view name);

/// First matching case: TypeIV; Type I in the order S3, S1, R1R1, Neuwirth,
/// NuEulerian, NuWard; Type II: alpha = -beta, then alpha' = 0; Type III:
/// alpha' = beta', then alpha = 0, then alpha' = 0.
SpecialCase special_case_detect(const ParamTuple& p);

/// Whether the defining predicate of `c` holds, ignoring priority.
bool case_matches(const ParamTuple& p, SpecialCase c);

enum class Field { Exact, Float };

struct EgfSeries {
  Field field = Field::Exact;
  TruncSeries<Rational> exact;  // valid when field == Exact
  TruncSeries<Real> approx;     // valid when field == Float

  /// Coefficient of y^n as a Real (converts exact values).
  Real coeff(int n) const;
};

/// Closed-form F(x0, y) expanded in y through order N. Exact unless an
/// irrational constant survives (or `force_float`), in which case the
/// series is returned in floating point at `precision` digits.
EgfSeries egf_closed_form(const ParamTuple& p, SpecialCase c, const Rational& x0, int N,
                          bool force_float = false, unsigned precision = 60);

/// sum_{n<=N} P_n(x0) y^n / n!, exact.
TruncSeries<Rational> egf_from_triangle(const ParamTuple& p, const Rational& x0, int N);

/// Assembles F(x0, y) from the reversion of the shifted inverse series
/// (method of characteristics), in floating point at `precision` digits.
/// Type I needs 0 < X0 < 1.
TruncSeries<Real> egf_characteristics(const ParamTuple& p, const Rational& x0, int N,
                                      unsigned precision = 60);

/// R_n for n = 0..N-1 using the triangle generated by p itself.
std::vector<Poly> pde_residual(const ParamTuple& p, int N);

/// R_n for n = 0..size-2 using the supplied row polynomials P_0, P_1, ...
std::vector<Poly> pde_residual(const ParamTuple& p, const std::vector<Poly>& rows);

// ---- implementation of the template above ----

namespace detail {
Real max_abs_diff(const TruncSeries<Real>& a, const TruncSeries<Real>& b);
Real max_abs(const TruncSeries<Real>& a);
}  // namespace detail

template <typename Make>
TruncSeries<Real> converged_difference(Make make, const Real& v0, int M) {
  const unsigned digits = Real::default_precision();
  const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) - 5);
  int order = 32;
  TruncSeries<Real> prev = shifted_difference(make(order), v0, M);
  for (int iter = 0; iter < 12; ++iter) {
    order *= 2;
    TruncSeries<Real> next = shifted_difference(make(order), v0, M);
    Real scale = detail::max_abs(next);
    if (scale < 1) scale = 1;
    if (detail::max_abs_diff(prev, next) <= tol * scale) return next;
    prev = std::move(next);
  }
  throw Error(Errc::PrecisionLoss, "inverse series did not converge at the evaluation point");
}

}  // namespace gkp
