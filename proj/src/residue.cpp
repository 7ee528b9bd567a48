#include "gkp/residue.hpp"

#include <algorithm>

namespace gkp {

namespace {

using FSeries = TruncSeries<Real>;
namespace mp = boost::multiprecision;

constexpr unsigned kGuardDigits = 10;

Real rpow(const Real& base, const Rational& e) {
  if (is_integer(e)) return mp::pow(base, Real(to_long(e)));
  return mp::pow(base, to_real(e));
}

/// 1 + c t
FSeries lin(const Real& c, int M) {
  FSeries s = FSeries::constant(Real(1), M);
  if (M >= 1) s[1] = c;
  return s;
}

/// (v0 + t)^e through t^M.
FSeries shifted_power(const Real& v0, const Rational& e, int M) {
  return pow(lin(Real(1) / v0, M), to_real(e)) * rpow(v0, e);
}

Real factorial_real(int n) {
  Real f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// (t / D(t))^{n+1} given the series D with D(0) = 0.
FSeries pole_factor(const FSeries& D, int n) {
  const FSeries D1 = D.divided_by_z();
  if (D1[0] == 0) throw Error(Errc::DomainError, "inverse series has a critical point at x0");
  return pow_int(inverse(D1), n + 1);
}

Rational type_i_x(const ParamTuple& p, const Rational& x0) {
  const TypeIDerived d = derived_type_i(p);
  const Rational X0 = Rational(d.sigma) * p.beta_p / p.beta * x0;
  if (X0 <= 0 || X0 >= 1) throw Error(Errc::DomainError, "Type I needs 0 < X0 < 1");
  return X0;
}

void check_job(const ResidueJob& job) {
  if (job.n < 0) throw Error(Errc::IndexOutOfRange, "n must be non-negative");
  if (job.precision < 50) throw Error(Errc::DomainError, "residue precision must be at least 50 digits");
  if (job.x0 <= 0 || job.x0 >= 1) throw Error(Errc::DomainError, "residue formulas need 0 < x0 < 1");
  if (classify(job.params) == RecType::IV) {
    throw Error(Errc::NotApplicable, "Type IV row polynomials have a product form");
  }
}

/// Type I: prefactor and bracket without the pole factor.
Real type_i(const ParamTuple& p, int n, const Rational& X0r, const FSeries& pole) {
  const TypeIDerived d = derived_type_i(p);
  const Real X0 = to_real(X0r);
  const Real sig(d.sigma);
  const Real w = 1 + sig * X0;
  const Rational eta = d.s + d.sp + 1 + d.rp - d.r;
  FSeries br = shifted_power(X0, d.s - d.r - 1, n) *
               pow(lin(sig / w, n), to_real(-eta)) * rpow(w, -eta) * pole;
  const Real pref = rpow(w, n * (d.r - d.rp) + d.s + d.sp) / rpow(X0, d.s + d.r * n) *
                    rpow(to_real(p.beta), Rational(n));
  return pref * factorial_real(n) * br[n];
}

Real evaluate_job(const ResidueJob& job, bool alternative) {
  const ParamTuple& p = job.params;
  const int n = job.n;
  const int M = n + 1;
  switch (classify(p)) {
    case RecType::I: {
      const TypeIDerived d = derived_type_i(p);
      const Rational X0r = type_i_x(p, job.x0);
      const Real X0 = to_real(X0r);
      if (!alternative) {
        const FSeries D =
            converged_difference([&](int k) { return g_inverse(p, k); }, X0, M);
        return type_i(p, n, X0r, pole_factor(D, n));
      }
      if (!is_nonneg_integer(d.r)) throw Error(Errc::NotApplicable, "alternative form needs r in Z_0");
      const long r = to_long(d.r);
      const Rational C = binomial(-1 - d.rp + d.r, r);
      const Rational L = pow_int(Rational(d.sigma), r) * C;
      if (L == 0) throw Error(Errc::NotApplicable, "alternative form needs C(-1-r'+r, r) != 0");
      const FSeries dq = converged_difference([&](int k) { return q0_series(d, k); }, X0, M);
      // log(Z Q^0(Z) / (X Q^0(X))) = log(1 + u(t))
      const FSeries W = lin(Real(1) / X0, M) * exp(dq / to_real(L));
      const FSeries logW = log(W);
      const Real scale = rpow(to_real(Rational(d.sigma)), Rational((n + 1) * r)) *
                         rpow(to_real(C), Rational(-n - 1));
      return type_i(p, n, X0r, pole_factor(logW, n)) * scale;
    }
    case RecType::II: {
      if (alternative) throw Error(Errc::NotApplicable, "alternative form is Type I only");
      const Real x = to_real(job.x0);
      const FSeries D = converged_difference([&](int k) { return g_inverse(p, k); }, x, M);
      const Rational gb = p.gamma / p.beta;
      const Rational gpb = p.gamma_p / p.beta;
      FSeries br = shifted_power(x, gb - 1, n) * mp::exp(to_real(gpb) * x) *
                   exp(FSeries::variable(n) * to_real(gpb)) * pole_factor(D, n);
      const Real pref = mp::exp(-to_real(((n + 1) * p.alpha_p + p.gamma_p) / p.beta) * x) /
                        (to_real(p.beta) * rpow(x, ((n + 1) * p.alpha + p.gamma) / p.beta));
      return pref * factorial_real(n) * br[n];
    }
    case RecType::III: {
      if (alternative) throw Error(Errc::NotApplicable, "alternative form is Type I only");
      const Real x = to_real(job.x0);
      const FSeries D = converged_difference([&](int k) { return g_inverse(p, k); }, x, M);
      const Rational gb = p.gamma / p.beta_p;
      // 1/(x+t) - 1/x
      FSeries recip(n);
      Real c = Real(1) / x;
      for (int j = 1; j <= n; ++j) {
        c = -c / x;
        recip[j] = c;
      }
      FSeries br = shifted_power(x, p.gamma_p / p.beta_p - 1, n) *
                   mp::exp(-to_real(gb) / x) * exp(recip * to_real(-gb)) * pole_factor(D, n);
      const Real pref = mp::exp(to_real(((n + 1) * p.alpha + p.gamma) / p.beta_p) / x) /
                        (to_real(p.beta_p) *
                         rpow(x, 1 + ((n + 1) * p.alpha_p + p.gamma_p) / p.beta_p));
      return pref * factorial_real(n) * br[n];
    }
    case RecType::IV:
      break;
  }
  throw Error(Errc::NotApplicable, "Type IV row polynomials have a product form");
}

unsigned working_digits(const ResidueJob& job) {
  return std::max(job.precision, 10u * static_cast<unsigned>(job.n)) + kGuardDigits;
}

}  // namespace

GenSeries q0_series(const TypeIDerived& d, int order) {
  if (!is_nonneg_integer(d.r)) throw Error(Errc::NotApplicable, "Q0 needs r in Z_0");
  return type_i_power_series(d, order);
}

std::vector<ResidueOutcome> row_poly_residue_batch(const std::vector<ResidueJob>& jobs,
                                                   bool alternative) {
  const int count = static_cast<int>(jobs.size());
  std::vector<ResidueOutcome> out(jobs.size());
  unsigned digits = 0;
  for (int i = 0; i < count; ++i) {
    try {
      check_job(jobs[i]);
      digits = std::max(digits, working_digits(jobs[i]));
    } catch (const Error& e) {
      out[i].error = e;
    }
  }
  if (digits == 0) return out;

  std::vector<Real> coarse(jobs.size()), fine(jobs.size());
  for (int phase = 0; phase < 2; ++phase) {
    PrecisionScope scope(phase == 0 ? digits : 2 * digits);
    std::vector<Real>& dest = phase == 0 ? coarse : fine;
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
      if (out[i].error) continue;
      try {
        dest[i] = evaluate_job(jobs[i], alternative);
      } catch (const Error& e) {
        out[i].error = e;
      }
    }
  }

  for (int i = 0; i < count; ++i) {
    if (out[i].error) continue;
    PrecisionScope scope(2 * digits);
    ResidueResult r;
    r.value = fine[i];
    r.error_estimate = mp::abs(fine[i] - coarse[i]);
    r.working_digits = digits;
    const Real scale = std::max(Real(1), Real(mp::abs(fine[i])));
    const Real tol = mp::pow(Real(10), -static_cast<int>(jobs[i].precision));
    if (r.error_estimate > tol * scale) {
      out[i].error = Error(Errc::PrecisionLoss, "residue estimate unstable under doubled precision");
    } else {
      out[i].result = std::move(r);
    }
  }
  return out;
}

namespace {

ResidueResult single(const ResidueJob& job, bool alternative) {
  auto out = row_poly_residue_batch({job}, alternative);
  if (out[0].error) throw *out[0].error;
  return *out[0].result;
}

}  // namespace

ResidueResult row_poly_residue(const ResidueJob& job) { return single(job, false); }

ResidueResult row_poly_residue_alt(const ResidueJob& job) { return single(job, true); }

}  // namespace gkp
