#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "gkp/error.hpp"
#include "gkp/numeric.hpp"

namespace gkp {

template <typename T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return T(q);
  }
}

/// Truncated power series c_0 + c_1 z + ... + c_N z^N over an exact
/// (Rational) or high-precision (Real) field. Binary operations work to the
/// smaller of the two orders; the order is never extended implicitly.
template <typename T>
class TruncSeries {
 public:
  using value_type = T;

  TruncSeries() : c_(1) {}
  explicit TruncSeries(int order) : c_(checked(order) + 1) {}
  TruncSeries(std::vector<T> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(checked(order)) + 1);
  }

  static TruncSeries constant(const T& c, int order) {
    TruncSeries s(order);
    s.c_[0] = c;
    return s;
  }
  /// The series z (zero if order is 0).
  static TruncSeries variable(int order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  T& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<T>& coeffs() const { return c_; }

  /// Drops or zero-pads coefficients to the requested order.
  TruncSeries with_order(int order) const { return TruncSeries(c_, order); }

  TruncSeries derivative() const {
    TruncSeries d(std::max(order() - 1, 0));
    for (int i = 1; i <= order(); ++i) d[i - 1] = c_[static_cast<std::size_t>(i)] * i;
    return d;
  }

  /// Antiderivative with zero constant term, one order higher.
  TruncSeries integral() const {
    TruncSeries s(order() + 1);
    for (int i = 0; i <= order(); ++i) s[i + 1] = c_[static_cast<std::size_t>(i)] / T(i + 1);
    return s;
  }

  /// f(z)/z for f with zero constant term; one order lower.
  TruncSeries divided_by_z() const {
    if (c_[0] != 0) throw Error(Errc::BadConstantTerm, "divided_by_z needs a zero constant term");
    TruncSeries s(std::max(order() - 1, 0));
    for (int i = 1; i <= order(); ++i) s[i - 1] = c_[static_cast<std::size_t>(i)];
    return s;
  }

  /// f(c z).
  TruncSeries scaled_argument(const T& c) const {
    TruncSeries s(*this);
    T p(1);
    for (int i = 1; i <= order(); ++i) {
      p *= c;
      s[i] *= p;
    }
    return s;
  }

  TruncSeries operator-() const {
    TruncSeries s(*this);
    for (auto& v : s.c_) v = -v;
    return s;
  }

  TruncSeries& operator*=(const T& c) {
    for (auto& v : c_) v *= c;
    return *this;
  }
  TruncSeries& operator/=(const T& c) {
    for (auto& v : c_) v /= c;
    return *this;
  }
  friend TruncSeries operator*(TruncSeries a, const T& c) { return a *= c; }
  friend TruncSeries operator*(const T& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator/(TruncSeries a, const T& c) { return a /= c; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
    return s;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int i = 0; i <= n; ++i) s[i] = a[i] - b[i];
    return s;
  }
  friend TruncSeries operator+(TruncSeries a, const T& c) {
    a[0] += c;
    return a;
  }
  friend TruncSeries operator-(TruncSeries a, const T& c) {
    a[0] -= c;
    return a;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

 private:
  static int checked(int order) {
    if (order < 0) throw Error(Errc::IndexOutOfRange, "series order must be non-negative");
    return order;
  }

  std::vector<T> c_;
};

// Below this order the OpenMP fork/join dominates the Cauchy product.
inline constexpr int kParallelSeriesOrder = 48;

/// Reference Cauchy product.
template <typename T>
TruncSeries<T> mul_serial(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries<T> s(n);
  for (int k = 0; k <= n; ++k) {
    T acc(0);
    for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    s[k] = acc;
  }
  return s;
}

/// Cauchy product with output coefficients distributed over threads.
template <typename T>
TruncSeries<T> mul_parallel(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries<T> s(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (int k = 0; k <= n; ++k) {
    T acc(0);
    for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    s[k] = acc;
  }
  return s;
}

template <typename T>
TruncSeries<T> operator*(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  if (std::min(a.order(), b.order()) >= kParallelSeriesOrder) return mul_parallel(a, b);
  return mul_serial(a, b);
}

/// a / b; b must have a nonzero constant term.
template <typename T>
TruncSeries<T> operator/(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  if (b[0] == 0) throw Error(Errc::DivByNonUnit, "divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  TruncSeries<T> q(n);
  for (int k = 0; k <= n; ++k) {
    T acc = a[k];
    for (int i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

template <typename T>
TruncSeries<T> inverse(const TruncSeries<T>& b) {
  return TruncSeries<T>::constant(T(1), b.order()) / b;
}

/// exp(f) for f(0) = 0.
template <typename T>
TruncSeries<T> exp(const TruncSeries<T>& f) {
  if (f[0] != 0) throw Error(Errc::BadConstantTerm, "exp needs f(0) = 0");
  const int n = f.order();
  TruncSeries<T> g(n);
  g[0] = T(1);
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int k = 1; k <= m; ++k) acc += f[k] * g[m - k] * k;
    g[m] = acc / T(m);
  }
  return g;
}

/// log(f) for f(0) = 1.
template <typename T>
TruncSeries<T> log(const TruncSeries<T>& f) {
  if (f[0] != 1) throw Error(Errc::BadConstantTerm, "log needs f(0) = 1");
  const int n = f.order();
  TruncSeries<T> h(n);
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int k = 1; k < m; ++k) acc += h[k] * f[m - k] * k;
    h[m] = f[m] - acc / T(m);
  }
  return h;
}

/// f^e for f(0) = 1, equal to exp(e log f); computed with the
/// f g' = e f' g recurrence.
template <typename T>
TruncSeries<T> pow(const TruncSeries<T>& f, const T& e) {
  if (f[0] != 1) throw Error(Errc::BadConstantTerm, "pow needs f(0) = 1");
  const int n = f.order();
  TruncSeries<T> g(n);
  g[0] = T(1);
  const T e1 = e + 1;
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int k = 1; k <= m; ++k) acc += (e1 * k - m) * f[k] * g[m - k];
    g[m] = acc / T(m);
  }
  return g;
}

/// f^m for integer m (negative needs a unit).
template <typename T>
TruncSeries<T> pow_int(TruncSeries<T> f, long m) {
  if (m < 0) return pow_int(inverse(f), -m);
  TruncSeries<T> acc = TruncSeries<T>::constant(T(1), f.order());
  while (m) {
    if (m & 1) acc = acc * f;
    m >>= 1;
    if (m) f = f * f;
  }
  return acc;
}

/// f(g(z)) for g(0) = 0.
template <typename T>
TruncSeries<T> compose(const TruncSeries<T>& f, const TruncSeries<T>& g) {
  if (g[0] != 0) throw Error(Errc::BadConstantTerm, "inner series of a composition needs g(0) = 0");
  const int n = std::min(f.order(), g.order());
  TruncSeries<T> gn = g.with_order(n);
  TruncSeries<T> acc = TruncSeries<T>::constant(f[n], n);
  for (int i = n - 1; i >= 0; --i) acc = acc * gn + f[i];
  return acc;
}

/// Compositional inverse g with f(g(z)) = g(f(z)) = z, by Newton iteration
/// with order doubling. Needs f(0) = 0 and f'(0) != 0.
template <typename T>
TruncSeries<T> reversion(const TruncSeries<T>& f) {
  const int N = f.order();
  if (N < 1 || f[0] != 0 || f[1] == 0) {
    throw Error(Errc::NotReversible, "reversion needs f(0) = 0 and f'(0) != 0");
  }
  const TruncSeries<T> df = f.derivative();
  TruncSeries<T> g(1);
  g[1] = T(1) / f[1];
  int m = 1;
  while (m < N) {
    m = std::min(2 * m, N);
    TruncSeries<T> gm = g.with_order(m);
    TruncSeries<T> residual = compose(f.with_order(m), gm) - TruncSeries<T>::variable(m);
    TruncSeries<T> slope = compose(df.with_order(m), gm);
    g = gm - residual / slope;
  }
  return g;
}

/// Coefficients of T_nu with T_nu^{-1}(z) = z exp(Q_nu(z)),
/// Q_nu(z) = sum_{k=1}^{nu-1} C(nu-1,k) (-z)^k / k. T_1 is the identity,
/// T_2 the tree function.
template <typename T>
TruncSeries<T> tree_function_series(int nu, int order) {
  if (nu < 1 || order < 1) throw Error(Errc::DomainError, "tree function needs nu >= 1 and order >= 1");
  TruncSeries<T> q(order);
  for (int k = 1; k <= std::min(nu - 1, order); ++k) {
    Rational c = binomial(Rational(nu - 1), k) / k;
    if (k % 2) c = -c;
    q[k] = from_rational<T>(c);
  }
  TruncSeries<T> inv = TruncSeries<T>::variable(order) * exp(q);
  return reversion(inv);
}

struct TreeFunctionFamily {
  int nu = 1;
  int order = 1;
  TruncSeries<Rational> series;
};

inline TreeFunctionFamily tree_function(int nu, int order) {
  return {nu, order, tree_function_series<Rational>(nu, order)};
}

/// Elementwise conversion, e.g. Rational -> Real at the working precision.
template <typename U, typename T>
TruncSeries<U> convert(const TruncSeries<T>& s) {
  std::vector<U> c;
  c.reserve(s.coeffs().size());
  for (const auto& v : s.coeffs()) {
    if constexpr (std::is_same_v<T, Rational> && !std::is_same_v<U, Rational>) {
      c.push_back(from_rational<U>(v));
    } else {
      c.push_back(U(v));
    }
  }
  return TruncSeries<U>(std::move(c), s.order());
}

}  // namespace gkp
