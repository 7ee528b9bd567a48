#pragma once

#include <vector>

#include "gkp/numeric.hpp"
#include "gkp/params.hpp"
#include "gkp/poly.hpp"

namespace gkp {

/// Rows 0..N of the number triangle generated by a parameter tuple. Only
/// 0 <= k <= n is stored; every other entry is zero.
class Triangle {
 public:
  using Row = std::vector<Rational>;

  Triangle() = default;
  Triangle(ParamTuple params, std::vector<Row> rows)
      : params_(std::move(params)), rows_(std::move(rows)) {}

  const ParamTuple& params() const { return params_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int n) const;
  /// Index of the last row (N); -1 when empty.
  int depth() const { return static_cast<int>(rows_.size()) - 1; }

  /// Entry |n k|, zero outside 0 <= k <= n <= N.
  Rational at(int n, int k) const;

  /// Entrywise equality of the stored rows (parameters are ignored).
  bool same_values(const Triangle& other) const { return rows_ == other.rows_; }

 private:
  ParamTuple params_;
  std::vector<Row> rows_;
};

/// Rows 0..N of the recurrence. Entries of one row are computed in
/// parallel (OpenMP) once the row is wide enough.
Triangle triangle(const ParamTuple& p, int N);

/// Single-threaded reference kernel; the parallel kernel must agree with it
/// bit for bit.
Triangle triangle_serial(const ParamTuple& p, int N);

/// Always runs the OpenMP kernel, regardless of row width.
Triangle triangle_parallel(const ParamTuple& p, int N);

/// True when every stored entry with n >= 1 satisfies the recurrence exactly
/// and row 0 is [1].
bool satisfies_recurrence(const Triangle& t);

/// Triangle-level action of a tabulated map: entry (n,k) of the result is
/// the sign-twisted / index-reversed entry of `t`.
Triangle transform(InvolutionKind kind, const Triangle& t);

/// P_n(x) = sum_k |n k| x^k.
Poly row_poly(const Triangle& t, int n);

/// prod_{k=1}^{n} (k a + c + (k a' + c') x). Type IV only.
Poly row_poly_product_type_iv(const ParamTuple& p, int n);

/// Closed double sum over Stirling cycle numbers for Type IV, 0^0 = 1.
Rational coeff_type_iv(const ParamTuple& p, int n, int k);

/// Unsigned Stirling numbers of the first kind.
Integer stirling_cycle(int n, int t);

}  // namespace gkp
