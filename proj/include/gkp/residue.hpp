#pragma once

#include <optional>
#include <vector>

#include "gkp/egf.hpp"
#include "gkp/numeric.hpp"
#include "gkp/params.hpp"

namespace gkp {

/// Evaluate P_n(x0) for a Type I, II or III tuple from the residue formula.
struct ResidueJob {
  ParamTuple params;
  int n = 0;
  Rational x0;
  unsigned precision = 60;  // requested decimal digits, at least 50
};

struct ResidueResult {
  Real value;
  Real error_estimate;  // |value at working precision - value at twice that|
  unsigned working_digits = 0;
};

/// Q0 for r in Z_0 (throws NotApplicable otherwise).
GenSeries q0_series(const TypeIDerived& d, int order);

/// n! [t^n] of the bracketed function times the prefactor. Throws
/// PrecisionLoss when the two precision runs disagree beyond the requested
/// digits, DomainError for x0 outside (0, 1) or X0 outside (0, 1).
ResidueResult row_poly_residue(const ResidueJob& job);

/// The Type I alternative form built on Q0 and log(Z Q^0(Z) / (X Q^0(X))).
/// Needs r in Z_0 and sigma^r C(-1-r'+r, r) != 0 (NotApplicable otherwise).
ResidueResult row_poly_residue_alt(const ResidueJob& job);

struct ResidueOutcome {
  std::optional<ResidueResult> result;
  std::optional<Error> error;
};

/// Evaluates independent jobs concurrently. All jobs of a batch share one
/// working precision per phase, because the default Real precision is
/// process-wide.
std::vector<ResidueOutcome> row_poly_residue_batch(const std::vector<ResidueJob>& jobs,
                                                   bool alternative = false);

}  // namespace gkp
