#include "gkp/identify.hpp"

#include "gkp/error.hpp"

namespace gkp {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(m.size()); ++c) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Rational entry(const std::vector<Triangle::Row>& rows, int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  const auto& r = rows[static_cast<std::size_t>(n)];
  return k < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(k)] : Rational(0);
}

/// Augmented system [A | b] from rows 1..N.
Matrix build_system(const std::vector<Triangle::Row>& rows, int N) {
  Matrix m;
  for (int n = 1; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Rational A = entry(rows, n - 1, k);
      const Rational B = entry(rows, n - 1, k - 1);
      m.push_back({A * n, A * k, A, B * n, B * k, B, entry(rows, n, k)});
    }
  }
  return m;
}

int rank_of(Matrix m) { return static_cast<int>(rref(m, 6).size()); }

}  // namespace

bool ParamFamily::contains(const ParamTuple& p) const {
  const ParamVector target = p.as_array();
  const ParamVector base = particular.as_array();
  // Is target - base in the span of the basis?
  Matrix m(6, std::vector<Rational>(nullspace_basis.size() + 1));
  for (int i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < nullspace_basis.size(); ++j) m[i][j] = nullspace_basis[j][i];
    m[i].back() = target[i] - base[i];
  }
  const int cols = static_cast<int>(nullspace_basis.size());
  const auto pivots = rref(m, cols + 1);
  return pivots.empty() || pivots.back() != cols;
}

ParamTuple ParamFamily::member(const std::vector<Rational>& t) const {
  if (static_cast<int>(t.size()) != dim) throw Error(Errc::IndexOutOfRange, "need one coefficient per basis vector");
  ParamVector v = particular.as_array();
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < 6; ++i) v[i] += t[j] * nullspace_basis[j][i];
  }
  return ParamTuple::from_array(v);
}

ParamFamily identify(const std::vector<Triangle::Row>& rows) {
  const int N = static_cast<int>(rows.size()) - 1;
  if (N < 2) throw Error(Errc::PrefixTooShallow, "identification needs rows 0..N with N >= 2");
  if (rows[0] != Triangle::Row{Rational(1)}) throw Error(Errc::Infeasible, "row 0 must be [1]");
  for (int n = 0; n <= N; ++n) {
    if (rows[n].size() != static_cast<std::size_t>(n + 1)) {
      throw Error(Errc::ParseError, "row " + std::to_string(n) + " must have n+1 entries");
    }
  }

  Matrix m = build_system(rows, N);
  const auto pivots = rref(m, 7);
  if (!pivots.empty() && pivots.back() == 6) {
    throw Error(Errc::Infeasible, "no parameter tuple reproduces the prefix");
  }

  ParamFamily fam;
  ParamVector part{};
  std::vector<bool> is_pivot(6, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    part[pivots[r]] = m[r][6];
  }
  fam.particular = ParamTuple::from_array(part);
  for (int f = 0; f < 6; ++f) {
    if (is_pivot[f]) continue;
    ParamVector v{};
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    fam.nullspace_basis.push_back(v);
  }
  fam.dim = static_cast<int>(fam.nullspace_basis.size());

  if (fam.dim > 0) {
    const int rank_n = static_cast<int>(pivots.size());
    const int rank_prev = rank_of(build_system(rows, N - 1));
    if (rank_n > rank_prev) {
      throw Error(Errc::PrefixTooShallow,
                  "rank still grows at row " + std::to_string(N) + "; more rows are needed");
    }
  }
  return fam;
}

}  // namespace gkp
