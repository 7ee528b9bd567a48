#include "gkp/params.hpp"

#include <vector>

#include "gkp/error.hpp"

namespace gkp {

ParamTuple parse_params(std::string_view csv) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    auto comma = csv.find(',', start);
    values.push_back(parse_rational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 6) {
    throw Error(Errc::ParseError, "expected 6 comma-separated parameters, got " +
                                      std::to_string(values.size()));
  }
  return {values[0], values[1], values[2], values[3], values[4], values[5]};
}

std::string to_string(const ParamTuple& p) {
  return "(" + to_string(p.alpha) + "," + to_string(p.beta) + "," + to_string(p.gamma) + ";" +
         to_string(p.alpha_p) + "," + to_string(p.beta_p) + "," + to_string(p.gamma_p) + ")";
}

RecType classify(const ParamTuple& p) {
  const bool b = p.beta != 0;
  const bool bp = p.beta_p != 0;
  if (b && bp) return RecType::I;
  if (b) return RecType::II;
  if (bp) return RecType::III;
  return RecType::IV;
}

std::string_view to_string(RecType t) {
  switch (t) {
    case RecType::I: return "I";
    case RecType::II: return "II";
    case RecType::III: return "III";
    case RecType::IV: return "IV";
  }
  return "?";
}

TypeIDerived derived_type_i(const ParamTuple& p) {
  if (classify(p) != RecType::I) {
    throw Error(Errc::NotTypeI, "beta*beta' = 0 for " + to_string(p));
  }
  TypeIDerived d;
  d.r = p.alpha / p.beta;
  d.rp = p.alpha_p / p.beta_p;
  d.s = (p.alpha + p.gamma) / p.beta;
  d.sp = -1 - (p.alpha_p + p.gamma_p) / p.beta_p;
  d.sigma = (p.beta * p.beta_p) > 0 ? 1 : -1;
  return d;
}

std::string_view to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::Star: return "star";
    case InvolutionKind::SignedStar: return "signed-star";
    case InvolutionKind::AltK: return "alt-k";
    case InvolutionKind::AltNminusK: return "alt-n-minus-k";
    case InvolutionKind::AltN: return "alt-n";
  }
  return "?";
}

InvolutionKind parse_involution(std::string_view name) {
  for (auto k : kAllInvolutions) {
    if (to_string(k) == name) return k;
  }
  throw Error(Errc::ParseError, "unknown involution '" + std::string(name) + "'");
}

ParamTuple apply_involution(InvolutionKind kind, const ParamTuple& p) {
  switch (kind) {
    case InvolutionKind::Star:
      return {p.alpha_p + p.beta_p, -p.beta_p, p.gamma_p, p.alpha + p.beta, -p.beta, p.gamma};
    case InvolutionKind::SignedStar:
      return {p.alpha_p + p.beta_p, -p.beta_p, p.gamma_p, -p.alpha - p.beta, p.beta, -p.gamma};
    case InvolutionKind::AltK:
      return {p.alpha, p.beta, p.gamma, -p.alpha_p, -p.beta_p, -p.gamma_p};
    case InvolutionKind::AltNminusK:
      return {-p.alpha, -p.beta, -p.gamma, p.alpha_p, p.beta_p, p.gamma_p};
    case InvolutionKind::AltN:
      return {-p.alpha, -p.beta, -p.gamma, -p.alpha_p, -p.beta_p, -p.gamma_p};
  }
  return p;
}

}  // namespace gkp
