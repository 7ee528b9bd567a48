#pragma once

#include <string>
#include <string_view>

#include "gkp/numeric.hpp"
#include "gkp/params.hpp"

namespace gkp {

enum class DegTag { TrivialKernel, BinomialScaled, DiagonalProduct, LeftColumn, NonDegenerate };

/// A degenerate family and the invariants its triangle depends on:
///   BinomialScaled  alpha, G = alpha+gamma (!= 0), H = alpha'+beta'+gamma'
///   DiagonalProduct L = alpha'+beta', gamma'
///   LeftColumn      M = alpha+gamma, alpha
/// Unused invariants are zero.
struct DegClass {
  DegTag tag = DegTag::NonDegenerate;
  Rational alpha, G, H, L, gamma_p, M;
  bool operator==(const DegClass&) const = default;
};

std::string_view to_string(DegTag t);

/// Pattern tests in the order TrivialKernel, BinomialScaled, DiagonalProduct,
/// LeftColumn.
DegClass degeneracy_class(const ParamTuple& p);

/// Entrywise equality of the two triangles through row N.
bool same_numbers(const ParamTuple& p1, const ParamTuple& p2, int N);

/// Closed-form |n k| for a degenerate class. Throws NotDegenerate.
Rational degenerate_value(const DegClass& c, int n, int k);

}  // namespace gkp
