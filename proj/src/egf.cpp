#include "gkp/egf.hpp"

#include <algorithm>
#include <map>

#include "gkp/triangle.hpp"

namespace gkp {

namespace {

using RSeries = TruncSeries<Rational>;
using FSeries = TruncSeries<Real>;

Real rpow(const Real& base, const Rational& e) {
  if (is_integer(e)) return boost::multiprecision::pow(base, Real(to_long(e)));
  return boost::multiprecision::pow(base, to_real(e));
}

}  // namespace

// ---------------------------------------------------------------------------
// Generalized inverse series

namespace {

Rational type_i_log_coeff(const TypeIDerived& d) {
  if (!is_nonneg_integer(d.r)) return 0;
  const long r = to_long(d.r);
  return pow_int(Rational(d.sigma), r) * binomial(-1 - d.rp + d.r, r);
}

}  // namespace

GenSeries type_i_power_series(const TypeIDerived& d, int order) {
  if (order < 1) throw Error(Errc::IndexOutOfRange, "type_i_power_series needs order >= 1");
  GenSeries g;
  g.trunc_order = order;
  const Rational a = -1 - d.rp + d.r;
  const Rational sigma(d.sigma);
  Rational c(1);  // sigma^k C(a, k)
  for (int k = 0; k < order; ++k) {
    if (k > 0) c = c * sigma * (a - (k - 1)) / k;
    if (c == 0 || Rational(k) == d.r) continue;
    g.terms.push_back({Rational(k) - d.r, c / (Rational(k) - d.r)});
  }
  return g;
}

GenSeries g_inverse(const ParamTuple& p, int order) {
  if (order < 1) throw Error(Errc::IndexOutOfRange, "g_inverse needs order >= 1");
  GenSeries g;
  g.trunc_order = order;
  switch (classify(p)) {
    case RecType::I:
      g = type_i_power_series(derived_type_i(p), order);
      g.log_coeff = type_i_log_coeff(derived_type_i(p));
      break;
    case RecType::II: {
      const Rational u = -p.alpha_p / p.beta;
      const Rational q = p.alpha / p.beta;
      Rational c = 1 / p.beta;  // u^k / (k! beta)
      for (int k = 0; k < order; ++k) {
        if (k > 0) c = c * u / k;
        if (c == 0) continue;
        if (Rational(k) == q) continue;
        g.terms.push_back({Rational(k) - q, c / (Rational(k) - q)});
      }
      if (is_nonneg_integer(q)) {
        const long m = to_long(q);
        g.log_coeff = pow_int(u, m) / (Rational(factorial(m)) * p.beta);
      }
      break;
    }
    case RecType::III: {
      const Rational v = p.alpha / p.beta_p;
      const Rational q = p.alpha_p / p.beta_p;
      Rational c = 1 / p.beta_p;  // v^k / (k! beta')
      for (int k = 0; k < order; ++k) {
        if (k > 0) c = c * v / k;
        if (c == 0) continue;
        const Rational e = Rational(k) + 1 + q;
        if (e == 0) continue;
        g.terms.push_back({-e, -c / e});
      }
      std::reverse(g.terms.begin(), g.terms.end());
      // The factorial is only ever taken of m = -1 - alpha'/beta' in Z_0.
      const Rational m_q = -1 - q;
      if (is_nonneg_integer(m_q)) {
        const long m = to_long(m_q);
        g.log_coeff = pow_int(v, m) / (Rational(factorial(m)) * p.beta_p);
      }
      break;
    }
    case RecType::IV:
      throw Error(Errc::NotApplicable, "no inverse series for Type IV");
  }
  return g;
}

Real evaluate(const GenSeries& g, const Real& v) {
  Real acc(0);
  for (const auto& t : g.terms) acc += to_real(t.coeff) * rpow(v, t.exponent);
  if (g.log_coeff != 0) acc += to_real(g.log_coeff) * boost::multiprecision::log(v);
  return acc;
}

FSeries shifted_difference(const GenSeries& g, const Real& v0, int M) {
  FSeries d(M);
  const Real inv = Real(1) / v0;
  for (const auto& t : g.terms) {
    const Real e = to_real(t.exponent);
    // c v0^e C(e, j) v0^{-j}
    Real f = to_real(t.coeff) * rpow(v0, t.exponent);
    for (int j = 1; j <= M; ++j) {
      f *= (e - (j - 1)) * inv / j;
      d[j] += f;
    }
  }
  if (g.log_coeff != 0) {
    const Real c = to_real(g.log_coeff);
    Real f = c;
    for (int j = 1; j <= M; ++j) {
      f *= inv;
      d[j] += (j % 2 ? f : Real(-f)) / j;
    }
  }
  return d;
}

namespace detail {

Real max_abs_diff(const FSeries& a, const FSeries& b) {
  Real m(0);
  for (int i = 0; i <= std::min(a.order(), b.order()); ++i) {
    Real v = boost::multiprecision::abs(a[i] - b[i]);
    if (v > m) m = v;
  }
  return m;
}

Real max_abs(const FSeries& a) {
  Real m(0);
  for (const auto& v : a.coeffs()) {
    Real w = boost::multiprecision::abs(v);
    if (w > m) m = w;
  }
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Case detection

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::S3_rp_plus1_eq_r: return "S3";
    case SpecialCase::S1_r_eq_minus1: return "S1";
    case SpecialCase::R1R1: return "R1R1";
    case SpecialCase::Neuwirth_rp0: return "Neuwirth";
    case SpecialCase::NuEulerian: return "NuEulerian";
    case SpecialCase::NuWard: return "NuWard";
    case SpecialCase::II_alpha_eq_minus_beta: return "II_alpha_eq_minus_beta";
    case SpecialCase::II_alphap0: return "II_alphap0";
    case SpecialCase::III_ap_eq_bp: return "III_ap_eq_bp";
    case SpecialCase::III_alpha0: return "III_alpha0";
    case SpecialCase::III_ap0: return "III_ap0";
    case SpecialCase::TypeIV: return "TypeIV";
    case SpecialCase::None: return "None";
  }
  return "?";
}

SpecialCase parse_special_case(std::string_view name) {
  for (SpecialCase c : kAllSpecialCases) {
    if (to_string(c) == name) return c;
  }
  if (name == "None") return SpecialCase::None;
  throw Error(Errc::ParseError, "unknown special case '" + std::string(name) + "'");
}

bool case_matches(const ParamTuple& p, SpecialCase c) {
  const RecType t = classify(p);
  switch (c) {
    case SpecialCase::TypeIV:
      return t == RecType::IV;
    case SpecialCase::S3_rp_plus1_eq_r:
    case SpecialCase::S1_r_eq_minus1:
    case SpecialCase::R1R1:
    case SpecialCase::Neuwirth_rp0:
    case SpecialCase::NuEulerian:
    case SpecialCase::NuWard: {
      if (t != RecType::I) return false;
      const TypeIDerived d = derived_type_i(p);
      switch (c) {
        case SpecialCase::S3_rp_plus1_eq_r: return 1 + d.rp == d.r;
        case SpecialCase::S1_r_eq_minus1: return d.r == -1;
        case SpecialCase::R1R1: return d.r == 1 && d.rp == 1;
        case SpecialCase::Neuwirth_rp0: return d.rp == 0;
        case SpecialCase::NuEulerian: return d.r == 0 && is_positive_integer(-d.rp);
        case SpecialCase::NuWard: return d.r == 0 && is_positive_integer(d.rp);
        default: return false;
      }
    }
    case SpecialCase::II_alpha_eq_minus_beta:
      return t == RecType::II && p.alpha == -p.beta;
    case SpecialCase::II_alphap0:
      return t == RecType::II && p.alpha_p == 0;
    case SpecialCase::III_ap_eq_bp:
      return t == RecType::III && p.alpha_p == p.beta_p;
    case SpecialCase::III_alpha0:
      return t == RecType::III && p.alpha == 0;
    case SpecialCase::III_ap0:
      return t == RecType::III && p.alpha_p == 0;
    case SpecialCase::None:
      return true;
  }
  return false;
}

SpecialCase special_case_detect(const ParamTuple& p) {
  for (SpecialCase c : kAllSpecialCases) {
    if (case_matches(p, c)) return c;
  }
  return SpecialCase::None;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

/// Product of base^exponent constants, kept exact as prime exponents so that
/// irrational factors that cancel are recognized.
class ConstTracker {
 public:
  void mul_pow(const Rational& base, const Rational& e) {
    if (base == 0) throw Error(Errc::DomainError, "zero base in a closed-form constant");
    if (e == 0) return;
    if (base < 0) {
      if (!is_integer(e)) {
        throw Error(Errc::DomainError, "negative base " + to_string(base) + " under the power " + to_string(e));
      }
      sign_sum_ += e;
    }
    add_factors(abs(numerator(base)), e);
    add_factors(abs(denominator(base)), -e);
  }
  void mul_exp(const Rational& g0) { exp_sum_ += g0; }

  bool is_rational() const {
    if (exp_sum_ != 0) return false;
    return std::all_of(primes_.begin(), primes_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
  }

  Rational exact_value() const {
    Rational v = sign();
    for (const auto& [prime, e] : primes_) v *= pow_int(Rational(prime), to_long(e));
    return v;
  }

  Real real_value() const {
    Real v(sign());
    for (const auto& [prime, e] : primes_) {
      if (e != 0) v *= rpow(Real(prime), e);
    }
    if (exp_sum_ != 0) v *= boost::multiprecision::exp(to_real(exp_sum_));
    return v;
  }

 private:
  int sign() const { return to_long(sign_sum_) % 2 ? -1 : 1; }

  void add_factors(Integer n, const Rational& e) {
    for (Integer d = 2; d * d <= n && d < 100000; ++d) {
      while (n % d == 0) {
        primes_[d] += e;
        n /= d;
      }
    }
    if (n > 1) primes_[n] += e;
  }

  std::map<Integer, Rational> primes_;
  Rational sign_sum_;
  Rational exp_sum_;
};

class Builder {
 public:
  explicit Builder(int N) : N_(N), acc_(RSeries::constant(1, N)) {}

  RSeries y() const { return RSeries::variable(N_); }
  RSeries c(const Rational& v) const { return RSeries::constant(v, N_); }
  RSeries lin(const Rational& c0, const Rational& c1) const {
    RSeries s = c(c0);
    if (N_ >= 1) s[1] = c1;
    return s;
  }

  /// f^e, the constant f(0)^e kept apart.
  void power(const RSeries& f, const Rational& e) {
    const Rational f0 = f[0];
    if (f0 == 0) throw Error(Errc::DomainError, "closed form has a branch point at y = 0");
    consts_.mul_pow(f0, e);
    const RSeries unit = f / f0;
    acc_ = acc_ * (is_integer(e) ? pow_int(unit, to_long(e)) : pow(unit, e));
  }

  void exponential(const RSeries& g) {
    consts_.mul_exp(g[0]);
    acc_ = acc_ * exp(g - g[0]);
  }

  void constant_power(const Rational& b, const Rational& e) { consts_.mul_pow(b, e); }

  EgfSeries finish(bool force_float, unsigned precision) const {
    EgfSeries out;
    if (!force_float && consts_.is_rational()) {
      out.field = Field::Exact;
      out.exact = acc_ * consts_.exact_value();
      return out;
    }
    PrecisionScope scope(precision);
    out.field = Field::Float;
    out.approx = convert<Real>(acc_) * consts_.real_value();
    return out;
  }

 private:
  int N_;
  RSeries acc_;
  ConstTracker consts_;
};

/// delta(y) with T_nu(w0 e^{L(y)}) = z0 + delta(y), on the local branch
/// through T_nu(w0) = z0. L(0) must be 0.
RSeries tree_branch(int nu, const Rational& z0, const RSeries& L) {
  const int N = L.order();
  if (z0 == 0) throw Error(Errc::DomainError, "tree-function branch point z0 = 0");
  if (nu >= 2 && z0 == 1) throw Error(Errc::DomainError, "tree-function critical point z0 = 1");
  // h(d) = log(1 + d/z0) + Q(z0 + d) - Q(z0)
  RSeries h = log(RSeries::constant(1, N) + RSeries::variable(N) / z0);
  for (int k = 1; k <= nu - 1; ++k) {
    Rational qk = binomial(Rational(nu - 1), k) / k;
    if (k % 2) qk = -qk;
    // (z0 + d)^k - z0^k
    for (int j = 1; j <= std::min(k, N); ++j) h[j] += qk * binomial(Rational(k), j) * pow_int(z0, k - j);
  }
  return compose(reversion(h), L);
}

void build(Builder& B, const ParamTuple& p, SpecialCase kase, const Rational& x) {
  const Rational &a = p.alpha, &b = p.beta, &g = p.gamma;
  const Rational &ap = p.alpha_p, &bp = p.beta_p, &gp = p.gamma_p;
  const RSeries one = B.c(1);
  auto nonzero = [](const Rational& v, const char* what) {
    if (v == 0) throw Error(Errc::DomainError, what);
  };

  switch (kase) {
    case SpecialCase::TypeIV: {
      const Rational A = a + ap * x;
      if (A != 0) {
        B.power(B.lin(1, -A), -(a + g + (ap + gp) * x) / A);
      } else {
        B.exponential(B.lin(0, g + gp * x));
      }
      return;
    }
    case SpecialCase::S3_rp_plus1_eq_r: {
      const Rational s = b + bp * x;
      nonzero(s, "beta + beta' x vanishes");
      if (a != 0) {
        const RSeries u = B.lin(1, -a * s / b);
        B.power((B.c(b) + pow(u, Rational(-b / a)) * Rational(bp * x)) / s, gp / bp - g / b);
        B.power(u, -(a + g) / a);
      } else {
        B.exponential(B.lin(0, s * g / b));
        B.power((B.c(b) + exp(B.lin(0, s)) * Rational(bp * x)) / s, gp / bp - g / b);
      }
      return;
    }
    case SpecialCase::S1_r_eq_minus1: {
      const Rational s = b + bp * x;
      if (ap != -bp) {
        const Rational h = ap + bp;
        const RSeries w = B.lin(1, -h * x);
        B.power((pow(w, Rational(-bp / h)) * s - b) / Rational(bp * x), g / b - 1);
        B.power(w, -(2 * b * bp + (ap + gp) * b - g * bp) / (b * h));
      } else {
        B.exponential(B.lin(0, x * bp * (1 + gp / bp - g / b)));
        B.power((exp(B.lin(0, x * bp)) * s - b) / Rational(bp * x), -1 + g / b);
      }
      return;
    }
    case SpecialCase::R1R1: {
      const Rational s = b + bp * x;
      nonzero(s, "beta + beta' x vanishes");
      const Rational z0 = 1 + b / (bp * x);
      const RSeries T = tree_branch(2, z0, B.lin(0, b * b / (bp * x))) + z0;
      B.constant_power(bp * x, -1 - g / b);
      B.power(T / s, 1 + gp / bp - g / b);
      const Rational e2 = 2 + gp / bp;
      B.constant_power(b, e2);
      B.power(T - Rational(1), -e2);
      return;
    }
    case SpecialCase::Neuwirth_rp0: {
      const Rational e = 1 + gp / bp;
      B.constant_power(b, e);
      if (a != 0) {
        const RSeries u = B.lin(1, -a);
        B.power(pow(u, Rational(b / a)) * Rational(b + bp * x) - Rational(bp * x), -e);
        B.power(u, (b / a) * (1 + gp / bp - (a + g) / b));
      } else {
        B.exponential(B.lin(0, g));
        B.power(B.c(b) + (one - exp(B.lin(0, b))) * Rational(bp * x), -e);
      }
      return;
    }
    case SpecialCase::NuEulerian: {
      const long nu = to_long(-ap / bp);
      const Rational s = b + bp * x;
      nonzero(s, "beta + beta' x vanishes");
      const Rational z0 = -bp * x / b;
      const Rational c = pow_int(b, 1 - nu) * pow_int(s, nu);
      const RSeries T = tree_branch(static_cast<int>(nu), z0, B.lin(0, c)) + z0;
      B.constant_power(b, 1 - nu + gp / bp);
      B.power(T / Rational(-bp * x), g / b);
      B.power((one - T) / s, 1 - nu - g / b + gp / bp);
      return;
    }
    case SpecialCase::NuWard: {
      const long nu = to_long(ap / bp);
      const Rational s = b + bp * x;
      nonzero(s, "beta + beta' x vanishes");
      const Rational z0 = bp * x / s;
      const Rational c = pow_int(b, 1 + nu) * pow_int(s, -nu);
      const RSeries T = tree_branch(static_cast<int>(nu + 1), z0, B.lin(0, c)) + z0;
      B.constant_power(b, 1 + nu + gp / bp);
      B.constant_power(s, -(1 + nu + gp / bp - g / b));
      B.power(T / Rational(bp * x), g / b);
      B.power(one - T, -1 - nu - gp / bp);
      return;
    }
    case SpecialCase::II_alpha_eq_minus_beta: {
      if (ap != 0) {
        const RSeries w = B.lin(1, -ap * x);
        B.power(one - log(w) * Rational(b / (ap * x)), g / b - 1);
        B.power(w, -1 - gp / ap);
      } else {
        B.power(B.lin(1, b), -1 + g / b);
        B.exponential(B.lin(0, gp * x));
      }
      return;
    }
    case SpecialCase::II_alphap0: {
      if (a != 0) {
        const RSeries u = B.lin(1, -a);
        B.power(u, -(1 + g / a));
        B.exponential((one - pow(u, Rational(-b / a))) * Rational(-gp * x / b));
      } else {
        B.exponential(B.lin(0, g) - (one - exp(B.lin(0, b))) * Rational(gp * x / b));
      }
      return;
    }
    case SpecialCase::III_ap_eq_bp: {
      if (a != 0) {
        nonzero(bp * x - a, "beta' x = alpha puts the tree branch at zero");
        const Rational z0 = 1 - a / (bp * x);
        const RSeries L = log(B.lin(1, a * a / (bp * x - a)));
        const RSeries one_minus_T = one - (tree_branch(2, z0, L) + z0);
        const Rational e = 2 + gp / bp;
        B.constant_power(a / (x * bp), e);
        B.power(one_minus_T, -e);
        B.exponential((B.c(1 / x) - one_minus_T * Rational(bp / a)) * Rational((a + g) / bp));
      } else {
        const RSeries w = B.lin(1, -2 * bp * x);
        B.power(w, -(1 + gp / (2 * bp)));
        B.exponential((one - pow(w, Rational(1, 2))) * Rational(g / (bp * x)));
      }
      return;
    }
    case SpecialCase::III_alpha0: {
      if (ap != -bp) {
        const Rational h = ap + bp;
        const RSeries w = B.lin(1, -x * h);
        B.exponential((one - pow(w, Rational(bp / h))) * Rational(g / (bp * x)));
        B.power(w, -(1 + gp / h));
      } else {
        B.exponential(B.lin(0, x * gp));
        B.exponential((one - exp(B.lin(0, -x * bp))) * Rational(g / (bp * x)));
      }
      return;
    }
    case SpecialCase::III_ap0: {
      if (a != 0) {
        const Rational e = 1 + gp / bp;
        B.constant_power(a, e);
        B.power(B.c(a) + log(B.lin(1, -a)) * Rational(bp * x), -e);
        B.power(B.lin(1, -a), -(1 + g / a));
      } else {
        B.exponential(B.lin(0, g));
        B.power(B.lin(1, -x * bp), -(1 + gp / bp));
      }
      return;
    }
    case SpecialCase::None:
      break;
  }
  throw Error(Errc::CaseMismatch, "no closed form for case None");
}

}  // namespace

Real EgfSeries::coeff(int n) const {
  if (field == Field::Exact) return to_real(exact[n]);
  return approx[n];
}

EgfSeries egf_closed_form(const ParamTuple& p, SpecialCase c, const Rational& x0, int N,
                          bool force_float, unsigned precision) {
  if (N < 0) throw Error(Errc::IndexOutOfRange, "order must be non-negative");
  if (c == SpecialCase::None || !case_matches(p, c)) {
    throw Error(Errc::CaseMismatch,
                "parameters " + to_string(p) + " do not match case " + std::string(to_string(c)));
  }
  if (x0 <= 0) throw Error(Errc::DomainError, "closed forms need x0 > 0");
  Builder B(N);
  build(B, p, c, x0);
  return B.finish(force_float, precision);
}

TruncSeries<Rational> egf_from_triangle(const ParamTuple& p, const Rational& x0, int N) {
  if (N < 0) throw Error(Errc::IndexOutOfRange, "order must be non-negative");
  const Triangle t = triangle(p, N);
  RSeries s(N);
  Rational fact(1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) fact *= n;
    s[n] = row_poly(t, n)(x0) / fact;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Characteristics

TruncSeries<Real> egf_characteristics(const ParamTuple& p, const Rational& x0, int N,
                                      unsigned precision) {
  if (N < 0) throw Error(Errc::IndexOutOfRange, "order must be non-negative");
  if (x0 <= 0) throw Error(Errc::DomainError, "characteristics need x0 > 0");
  const RecType type = classify(p);
  if (type == RecType::IV) throw Error(Errc::NotApplicable, "Type IV has no inverse series");
  PrecisionScope scope(precision);
  if (N == 0) return FSeries::constant(Real(1), 0);

  Rational v0 = x0;
  if (type == RecType::I) {
    const TypeIDerived d = derived_type_i(p);
    v0 = Rational(d.sigma) * p.beta_p / p.beta * x0;
    if (v0 >= 1) throw Error(Errc::DomainError, "Type I needs 0 < X0 < 1");
  }
  const Real v = to_real(v0);
  const FSeries D = converged_difference([&](int k) { return g_inverse(p, k); }, v, N);
  const FSeries delta = reversion(D);
  const FSeries one = FSeries::constant(Real(1), N);

  switch (type) {
    case RecType::I: {
      const TypeIDerived d = derived_type_i(p);
      const Real sig(d.sigma);
      const Real c = to_real(p.beta) * rpow(v, -d.r) * rpow(1 + sig * v, d.r - d.rp);
      const FSeries dw = delta.scaled_argument(c);
      return pow(one + dw / v, to_real(d.s)) *
             pow(one + dw * Real(sig / (1 + sig * v)), to_real(-(d.s + d.sp)));
    }
    case RecType::II: {
      const Real c = rpow(v, -p.alpha / p.beta) *
                     boost::multiprecision::exp(-to_real(p.alpha_p / p.beta) * v);
      const FSeries dw = delta.scaled_argument(c);
      return pow(one + dw / v, to_real((p.alpha + p.gamma) / p.beta)) *
             exp(dw * to_real((p.alpha_p + p.gamma_p) / p.beta));
    }
    case RecType::III: {
      const Real c = rpow(v, -p.alpha_p / p.beta_p) *
                     boost::multiprecision::exp(to_real(p.alpha / p.beta_p) / v);
      const FSeries dw = delta.scaled_argument(c);
      const FSeries inner = (dw / v) / (one * v + dw);
      return pow(one + dw / v, to_real(1 + (p.alpha_p + p.gamma_p) / p.beta_p)) *
             exp(inner * to_real((p.alpha + p.gamma) / p.beta_p));
    }
    case RecType::IV:
      break;
  }
  throw Error(Errc::NotApplicable, "Type IV has no inverse series");
}

// ---------------------------------------------------------------------------
// PDE residual

std::vector<Poly> pde_residual(const ParamTuple& p, const std::vector<Poly>& rows) {
  std::vector<Poly> out;
  const Poly x = Poly::monomial(1, 1);
  const Poly lead = Poly({p.beta, p.beta_p}) * x;
  const Poly slope({p.alpha, p.alpha_p});
  const Poly rhs({p.alpha + p.gamma, p.alpha_p + p.beta_p + p.gamma_p});
  for (std::size_t n = 0; n + 1 < rows.size(); ++n) {
    const Poly& P = rows[n];
    Poly r = rows[n + 1];
    r -= lead * P.derivative();
    r -= slope * P * Rational(static_cast<long>(n));
    r -= rhs * P;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Poly> pde_residual(const ParamTuple& p, int N) {
  if (N < 0) throw Error(Errc::IndexOutOfRange, "N must be non-negative");
  const Triangle t = triangle(p, N);
  std::vector<Poly> rows;
  for (int n = 0; n <= N; ++n) rows.push_back(row_poly(t, n));
  return pde_residual(p, rows);
}

}  // namespace gkp
