#pragma once

#include <array>
#include <string>
#include <string_view>

#include "gkp/numeric.hpp"

namespace gkp {

/// Coefficients of the recurrence
///   |n k| = (a n + b k + c)|n-1 k| + (a' n + b' k + c')|n-1 k-1| + [n=k=0].
struct ParamTuple {
  Rational alpha, beta, gamma;
  Rational alpha_p, beta_p, gamma_p;

  std::array<Rational, 6> as_array() const {
    return {alpha, beta, gamma, alpha_p, beta_p, gamma_p};
  }
  static ParamTuple from_array(const std::array<Rational, 6>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }

  bool operator==(const ParamTuple&) const = default;
};

/// Parses "a,b,c,a',b',c'" (each entry "p/q" or an integer).
ParamTuple parse_params(std::string_view csv);
std::string to_string(const ParamTuple& p);

/// Which of beta, beta' vanish decides the shape of the EGF equation.
enum class RecType { I, II, III, IV };

RecType classify(const ParamTuple& p);
std::string_view to_string(RecType t);

/// Reduced Type-I parameters; X = sigma (b'/b) x, Y = b y.
struct TypeIDerived {
  Rational r, rp, s, sp;
  int sigma = 1;

  bool operator==(const TypeIDerived&) const = default;
};

/// Throws Error(NotTypeI) unless beta*beta' != 0.
TypeIDerived derived_type_i(const ParamTuple& p);

enum class InvolutionKind {
  Star,        // |n k| -> |n n-k|
  SignedStar,  // |n k| -> (-1)^k |n n-k|
  AltK,        // |n k| -> (-1)^k |n k|
  AltNminusK,  // |n k| -> (-1)^(n-k) |n k|
  AltN,        // |n k| -> (-1)^n |n k|
};

inline constexpr std::array<InvolutionKind, 5> kAllInvolutions = {
    InvolutionKind::Star, InvolutionKind::SignedStar, InvolutionKind::AltK,
    InvolutionKind::AltNminusK, InvolutionKind::AltN};

std::string_view to_string(InvolutionKind k);
InvolutionKind parse_involution(std::string_view name);

/// Parameter action of the tabulated maps. Note that SignedStar is not
/// self-inverse: applied twice it equals AltN.
ParamTuple apply_involution(InvolutionKind kind, const ParamTuple& p);

}  // namespace gkp
