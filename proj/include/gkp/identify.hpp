#pragma once

#include <array>
#include <vector>

#include "gkp/numeric.hpp"
#include "gkp/params.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

using ParamVector = std::array<Rational, 6>;

/// particular + sum_i t_i basis_i, all reproducing the same triangle prefix.
struct ParamFamily {
  ParamTuple particular;
  std::vector<ParamVector> nullspace_basis;
  int dim = 0;

  bool contains(const ParamTuple& p) const;
  /// particular + sum_i t[i] * basis[i]; t.size() must equal dim.
  ParamTuple member(const std::vector<Rational>& t) const;
};

/// Solves the recurrence, read as linear equations in the six parameters,
/// over every entry of rows 1..N. Throws Infeasible when no tuple fits,
/// PrefixTooShallow when N < 2 or when the rank still grows at row N while
/// unknowns remain free.
ParamFamily identify(const std::vector<Triangle::Row>& rows);
inline ParamFamily identify(const Triangle& t) { return identify(t.rows()); }

}  // namespace gkp
