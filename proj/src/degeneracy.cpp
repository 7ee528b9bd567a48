#include "gkp/degeneracy.hpp"

#include "gkp/error.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

std::string_view to_string(DegTag t) {
  switch (t) {
    case DegTag::TrivialKernel: return "TrivialKernel";
    case DegTag::BinomialScaled: return "BinomialScaled";
    case DegTag::DiagonalProduct: return "DiagonalProduct";
    case DegTag::LeftColumn: return "LeftColumn";
    case DegTag::NonDegenerate: return "NonDegenerate";
  }
  return "?";
}

DegClass degeneracy_class(const ParamTuple& p) {
  DegClass c;
  const Rational G = p.alpha + p.gamma;
  const Rational H = p.alpha_p + p.beta_p + p.gamma_p;
  if (G == 0 && H == 0) {
    c.tag = DegTag::TrivialKernel;
    return c;
  }
  if (G != 0) {
    // beta and gamma fix rho and G; the primed block must follow.
    const Rational rho = (p.beta - p.alpha) / G;
    if (p.alpha_p == -rho * H && p.beta_p == rho * H + p.alpha * H / G) {
      c.tag = DegTag::BinomialScaled;
      c.alpha = p.alpha;
      c.G = G;
      c.H = H;
      return c;
    }
  }
  if (p.beta == -p.alpha && p.gamma == -p.alpha) {
    c.tag = DegTag::DiagonalProduct;
    c.L = p.alpha_p + p.beta_p;
    c.gamma_p = p.gamma_p;
    return c;
  }
  if (p.alpha_p == 0 && p.gamma_p == -p.beta_p) {
    c.tag = DegTag::LeftColumn;
    c.M = G;
    c.alpha = p.alpha;
    return c;
  }
  return c;
}

bool same_numbers(const ParamTuple& p1, const ParamTuple& p2, int N) {
  return triangle(p1, N).same_values(triangle(p2, N));
}

Rational degenerate_value(const DegClass& c, int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(Errc::IndexOutOfRange, "need 0 <= k <= n");
  switch (c.tag) {
    case DegTag::TrivialKernel:
      return n == 0 && k == 0 ? 1 : 0;
    case DegTag::BinomialScaled: {
      Rational v = binomial(Rational(n), k) * pow_int(c.H / c.G, k);
      for (int j = 0; j < n; ++j) v *= c.G + c.alpha * j;
      return v;
    }
    case DegTag::DiagonalProduct: {
      if (k != n) return 0;
      Rational v(1);
      for (int j = 1; j <= n; ++j) v *= c.gamma_p + c.L * j;
      return v;
    }
    case DegTag::LeftColumn: {
      if (k != 0) return 0;
      Rational v(1);
      for (int j = 0; j < n; ++j) v *= c.M + c.alpha * j;
      return v;
    }
    case DegTag::NonDegenerate:
      break;
  }
  throw Error(Errc::NotDegenerate, "no closed form for a non-degenerate tuple");
}

}  // namespace gkp
