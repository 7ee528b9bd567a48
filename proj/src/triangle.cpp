#include "gkp/triangle.hpp"

#include <string>

#include "gkp/error.hpp"

namespace gkp {

namespace {

// Below this width the OpenMP fork/join costs more than the row itself.
constexpr int kParallelRowWidth = 64;

Rational left_coeff(const ParamTuple& p, long n, long k) { return p.alpha * n + p.beta * k + p.gamma; }

Rational diag_coeff(const ParamTuple& p, long n, long k) {
  return p.alpha_p * n + p.beta_p * k + p.gamma_p;
}

Rational entry(const ParamTuple& p, const Triangle::Row& prev, long n, long k) {
  Rational v(0);
  if (k <= n - 1) v += left_coeff(p, n, k) * prev[static_cast<std::size_t>(k)];
  if (k >= 1) v += diag_coeff(p, n, k) * prev[static_cast<std::size_t>(k - 1)];
  return v;
}

void check_depth(int N) {
  if (N < 0) throw Error(Errc::IndexOutOfRange, "row count must be non-negative");
}

}  // namespace

const Triangle::Row& Triangle::row(int n) const {
  if (n < 0 || n > depth()) {
    throw Error(Errc::IndexOutOfRange, "row " + std::to_string(n) + " outside 0.." + std::to_string(depth()));
  }
  return rows_[static_cast<std::size_t>(n)];
}

Rational Triangle::at(int n, int k) const {
  if (n < 0 || n > depth() || k < 0 || k > n) return Rational(0);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Triangle triangle_serial(const ParamTuple& p, int N) {
  check_depth(N);
  std::vector<Triangle::Row> rows;
  rows.reserve(static_cast<std::size_t>(N) + 1);
  rows.push_back(Triangle::Row{Rational(1)});
  for (long n = 1; n <= N; ++n) {
    const auto& prev = rows.back();
    Triangle::Row cur(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) cur[static_cast<std::size_t>(k)] = entry(p, prev, n, k);
    rows.push_back(std::move(cur));
  }
  return Triangle(p, std::move(rows));
}

namespace {

Triangle triangle_omp(const ParamTuple& p, int N, int min_width) {
  check_depth(N);
  std::vector<Triangle::Row> rows(static_cast<std::size_t>(N) + 1);
  rows[0] = Triangle::Row{Rational(1)};
  for (long n = 1; n <= N; ++n) {
    const auto& prev = rows[static_cast<std::size_t>(n - 1)];
    auto& cur = rows[static_cast<std::size_t>(n)];
    cur.resize(static_cast<std::size_t>(n) + 1);
#pragma omp parallel for schedule(static) if (n + 1 >= min_width)
    for (long k = 0; k <= n; ++k) cur[static_cast<std::size_t>(k)] = entry(p, prev, n, k);
  }
  return Triangle(p, std::move(rows));
}

}  // namespace

Triangle triangle_parallel(const ParamTuple& p, int N) { return triangle_omp(p, N, 0); }

Triangle triangle(const ParamTuple& p, int N) { return triangle_omp(p, N, kParallelRowWidth); }

bool satisfies_recurrence(const Triangle& t) {
  if (t.depth() < 0 || t.row(0) != Triangle::Row{Rational(1)}) return false;
  const auto& p = t.params();
  for (int n = 1; n <= t.depth(); ++n) {
    if (static_cast<int>(t.row(n).size()) != n + 1) return false;
    for (int k = 0; k <= n; ++k) {
      Rational rhs = left_coeff(p, n, k) * t.at(n - 1, k) + diag_coeff(p, n, k) * t.at(n - 1, k - 1);
      if (t.at(n, k) != rhs) return false;
    }
  }
  return true;
}

Triangle transform(InvolutionKind kind, const Triangle& t) {
  std::vector<Triangle::Row> rows;
  rows.reserve(t.rows().size());
  for (int n = 0; n <= t.depth(); ++n) {
    Triangle::Row cur(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      Rational v;
      switch (kind) {
        case InvolutionKind::Star: v = t.at(n, n - k); break;
        case InvolutionKind::SignedStar: v = (k % 2 ? -1 : 1) * t.at(n, n - k); break;
        case InvolutionKind::AltK: v = (k % 2 ? -1 : 1) * t.at(n, k); break;
        case InvolutionKind::AltNminusK: v = ((n - k) % 2 ? -1 : 1) * t.at(n, k); break;
        case InvolutionKind::AltN: v = (n % 2 ? -1 : 1) * t.at(n, k); break;
      }
      cur[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(cur));
  }
  return Triangle(apply_involution(kind, t.params()), std::move(rows));
}

Poly row_poly(const Triangle& t, int n) { return Poly(t.row(n)); }

namespace {

void require_type_iv(const ParamTuple& p) {
  if (classify(p) != RecType::IV) throw Error(Errc::NotTypeIV, "beta or beta' nonzero in " + to_string(p));
}

}  // namespace

Poly row_poly_product_type_iv(const ParamTuple& p, int n) {
  require_type_iv(p);
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative row index");
  Poly acc = Poly::constant(1);
  for (long k = 1; k <= n; ++k) {
    acc = acc * Poly(std::vector<Rational>{p.alpha * k + p.gamma, p.alpha_p * k + p.gamma_p});
  }
  return acc;
}

Rational coeff_type_iv(const ParamTuple& p, int n, int k) {
  require_type_iv(p);
  if (n < 0 || k < 0 || k > n) {
    throw Error(Errc::IndexOutOfRange, "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const Rational g = p.alpha + p.gamma;
  const Rational gp = p.alpha_p + p.gamma_p;
  Rational sum(0);
  for (int t = 0; t <= n; ++t) {
    Integer cyc = stirling_cycle(n, t);
    if (cyc == 0) continue;
    for (int s = 0; s <= std::min(k, t); ++s) {
      if (k - s > n - t) continue;  // C(n-t, k-s) = 0
      Rational term(cyc);
      term *= binomial(Rational(t), s) * binomial(Rational(n - t), k - s);
      term *= pow_int(g, t - s) * pow_int(gp, s);
      term *= pow_int(p.alpha, n - t + s - k) * pow_int(p.alpha_p, k - s);
      sum += term;
    }
  }
  return sum;
}

Integer stirling_cycle(int n, int t) {
  if (n < 0 || t < 0) throw Error(Errc::IndexOutOfRange, "negative Stirling index");
  if (t > n) return Integer(0);
  std::vector<Integer> row{Integer(1)};  // c(0, .)
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      Integer v(0);
      if (j <= m - 1) v += Integer(m - 1) * row[static_cast<std::size_t>(j)];
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(t)];
}

}  // namespace gkp
