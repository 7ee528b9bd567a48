#pragma once

#include <random>
#include <vector>

#include "gkp/degeneracy.hpp"
#include "gkp/egf.hpp"
#include "gkp/numeric.hpp"
#include "gkp/params.hpp"

namespace gkp::testing {

/// Small random rationals num/den with num in [-lim, lim], den in 1..maxden.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int lim = 3, int maxden = 3) {
    return Rational(integer(-lim, lim), integer(1, maxden));
  }
  Rational nonzero(int lim = 3, int maxden = 3) {
    Rational q;
    while (q == 0) q = rational(lim, maxden);
    return q;
  }
  Rational positive(int lim = 3, int maxden = 3) {
    return Rational(integer(1, lim), integer(1, maxden));
  }

  ParamTuple tuple() {
    return {rational(), rational(), rational(), rational(), rational(), rational()};
  }

  ParamTuple tuple_of_type(RecType t) {
    ParamTuple p = tuple();
    p.beta = t == RecType::I || t == RecType::II ? nonzero() : Rational(0);
    p.beta_p = t == RecType::I || t == RecType::III ? nonzero() : Rational(0);
    return p;
  }

  /// A random tuple satisfying the defining predicate of `c`.
  ParamTuple instance(SpecialCase c) {
    ParamTuple p = tuple();
    switch (c) {
      case SpecialCase::TypeIV:
        p.beta = p.beta_p = 0;
        break;
      case SpecialCase::S3_rp_plus1_eq_r: {
        p.beta = nonzero();
        p.beta_p = nonzero();
        const Rational r = coin() ? Rational(0) : rational();
        p.alpha = r * p.beta;
        p.alpha_p = (r - 1) * p.beta_p;
        break;
      }
      case SpecialCase::S1_r_eq_minus1:
        p.beta = nonzero();
        p.beta_p = nonzero();
        p.alpha = -p.beta;
        if (coin()) p.alpha_p = -p.beta_p;
        break;
      case SpecialCase::R1R1:
        p.beta = nonzero();
        p.beta_p = nonzero();
        p.alpha = p.beta;
        p.alpha_p = p.beta_p;
        break;
      case SpecialCase::Neuwirth_rp0:
        p.beta = nonzero();
        p.beta_p = nonzero();
        p.alpha_p = 0;
        if (coin()) p.alpha = 0;
        break;
      case SpecialCase::NuEulerian:
      case SpecialCase::NuWard: {
        p.beta = nonzero();
        p.beta_p = nonzero();
        p.alpha = 0;
        const int nu = integer(1, 3);
        p.alpha_p = (c == SpecialCase::NuEulerian ? -nu : nu) * p.beta_p;
        break;
      }
      case SpecialCase::II_alpha_eq_minus_beta:
        p.beta = nonzero();
        p.beta_p = 0;
        p.alpha = -p.beta;
        if (coin()) p.alpha_p = 0;
        break;
      case SpecialCase::II_alphap0:
        p.beta = nonzero();
        p.beta_p = 0;
        p.alpha_p = 0;
        if (coin()) p.alpha = 0;
        break;
      case SpecialCase::III_ap_eq_bp:
        p.beta = 0;
        p.beta_p = nonzero();
        p.alpha_p = p.beta_p;
        if (coin()) p.alpha = 0;
        break;
      case SpecialCase::III_alpha0:
        p.beta = 0;
        p.beta_p = nonzero();
        p.alpha = 0;
        if (coin()) p.alpha_p = -p.beta_p;
        break;
      case SpecialCase::III_ap0:
        p.beta = 0;
        p.beta_p = nonzero();
        p.alpha_p = 0;
        if (coin()) p.alpha = 0;
        break;
      case SpecialCase::None:
        break;
    }
    return p;
  }

  /// Random invariants for a degenerate family.
  DegClass invariants(DegTag tag) {
    DegClass c;
    c.tag = tag;
    switch (tag) {
      case DegTag::BinomialScaled:
        c.alpha = rational();
        c.G = nonzero();
        c.H = rational();
        break;
      case DegTag::DiagonalProduct:
        c.L = rational();
        c.gamma_p = rational();
        break;
      case DegTag::LeftColumn:
        c.M = rational();
        c.alpha = rational();
        break;
      default:
        break;
    }
    return c;
  }

  /// A tuple of the family with invariants `c`; the remaining parameters
  /// (rho, alpha, alpha', beta, beta' as applicable) are random.
  ParamTuple family_member(const DegClass& c) {
    switch (c.tag) {
      case DegTag::TrivialKernel: {
        const Rational a = rational(), b = rational(), ap = rational(), bp = rational();
        return {a, b, -a, ap, bp, -ap - bp};
      }
      case DegTag::BinomialScaled: {
        const Rational rho = rational();
        const Rational& a = c.alpha;
        return {a, a + rho * c.G, c.G - a, -rho * c.H, rho * c.H + a * c.H / c.G, c.H - a * c.H / c.G};
      }
      case DegTag::DiagonalProduct: {
        const Rational a = rational(), ap = rational();
        return {a, -a, -a, ap, c.L - ap, c.gamma_p};
      }
      case DegTag::LeftColumn: {
        const Rational b = rational(), bp = rational();
        return {c.alpha, b, c.M - c.alpha, 0, bp, -bp};
      }
      case DegTag::NonDegenerate:
        break;
    }
    return tuple();
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gkp::testing
