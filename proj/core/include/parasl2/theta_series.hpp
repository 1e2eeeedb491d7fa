#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "parasl2/errors.hpp"
#include "parasl2/matrix.hpp"
#include "parasl2/polynomial.hpp"
#include "parasl2/rational.hpp"

namespace parasl2 {

/// Truncated series c_0 + c_1 t + ... + c_r t^r in a central nilpotent
/// variable t with t^{r+1} = 0. The coefficient ring C may be
/// noncommutative; products keep coefficient order.
///
/// Requirements on C: default construction yields zero, C(1) is the unit,
/// ring operators, and multiplication by Rational.
template <class C>
class ThetaSeries {
 public:
  using coefficient_type = C;

  /// Zero series of order 0.
  ThetaSeries() : coeffs_(1, C(0)) {}

  /// Zero series of order r.
  explicit ThetaSeries(int order) : coeffs_(checked_size(order), C(0)) {}

  /// Constant series c of order r.
  ThetaSeries(int order, C constant) : coeffs_(checked_size(order), C(0)) { coeffs_[0] = std::move(constant); }

  /// Series with the given coefficients; the order is coeffs.size() - 1.
  explicit ThetaSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw structural_error("theta series needs at least one coefficient");
  }

  /// c * t^k at order r (zero when k > r).
  static ThetaSeries monomial(int order, int k, C c) {
    ThetaSeries s(order);
    if (k < 0) throw structural_error("negative theta degree");
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }
  static ThetaSeries theta(int order) { return monomial(order, 1, C(1)); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }
  const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  C& operator[](std::size_t k) { return coeffs_.at(k); }

  bool is_zero() const {
    using parasl2::is_zero;
    for (const auto& c : coeffs_)
      if (!is_zero(c)) return false;
    return true;
  }

  ThetaSeries& operator+=(const ThetaSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  ThetaSeries& operator-=(const ThetaSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }
  friend ThetaSeries operator+(ThetaSeries a, const ThetaSeries& b) { return a += b; }
  friend ThetaSeries operator-(ThetaSeries a, const ThetaSeries& b) { return a -= b; }
  friend ThetaSeries operator-(const ThetaSeries& a) {
    std::vector<C> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(C(-x));
    return ThetaSeries(std::move(c));
  }

  /// Cauchy product truncated at degree r.
  friend ThetaSeries operator*(const ThetaSeries& a, const ThetaSeries& b) {
    a.check_order(b);
    const std::size_t n = a.coeffs_.size();
    std::vector<C> c(n, C(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return ThetaSeries(std::move(c));
  }
  ThetaSeries& operator*=(const ThetaSeries& o) { return *this = *this * o; }

  friend ThetaSeries operator*(const ThetaSeries& a, const Rational& s) {
    std::vector<C> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(C(x * s));
    return ThetaSeries(std::move(c));
  }
  friend ThetaSeries operator*(const Rational& s, const ThetaSeries& a) { return a * s; }

  friend bool operator==(const ThetaSeries& a, const ThetaSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const ThetaSeries& a, const ThetaSeries& b) { return !(a == b); }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw structural_error("theta series order must be >= 0, got " + std::to_string(order));
    return static_cast<std::size_t>(order) + 1;
  }
  void check_order(const ThetaSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw structural_error("theta series order mismatch: " + std::to_string(order()) + " vs " +
                             std::to_string(o.order()));
  }

  std::vector<C> coeffs_;
};

using Series = ThetaSeries<Rational>;

template <class C>
bool is_zero(const ThetaSeries<C>& s) {
  return s.is_zero();
}
template <class C>
ThetaSeries<C> one_like(const ThetaSeries<C>& s) {
  return ThetaSeries<C>(s.order(), C(1));
}
template <class C>
ThetaSeries<C> zero_like(const ThetaSeries<C>& s) {
  return ThetaSeries<C>(s.order());
}

/// sum_{k=0}^{r} x^k t^k / k!
template <class C>
ThetaSeries<C> ts_exp(const C& x, int order) {
  ThetaSeries<C> out(order, C(1));
  C power = C(1);
  for (int k = 1; k <= order; ++k) {
    power = power * x;
    out[static_cast<std::size_t>(k)] = C(power * inverse(factorial(static_cast<unsigned>(k))));
  }
  return out;
}

/// sum over even 2k <= r of (-1)^k x^{2k} t^{2k} / (2k)!
template <class C>
ThetaSeries<C> ts_cos(const C& x, int order) {
  ThetaSeries<C> e = ts_exp(x, order);
  ThetaSeries<C> out(order);
  for (int k = 0; k <= order; k += 2)
    out[static_cast<std::size_t>(k)] = (k / 2) % 2 == 0 ? e[k] : C(-e[k]);
  return out;
}

/// sum over odd 2k+1 <= r of (-1)^k x^{2k+1} t^{2k+1} / (2k+1)!
template <class C>
ThetaSeries<C> ts_sin(const C& x, int order) {
  ThetaSeries<C> e = ts_exp(x, order);
  ThetaSeries<C> out(order);
  for (int k = 1; k <= order; k += 2)
    out[static_cast<std::size_t>(k)] = (k / 2) % 2 == 0 ? e[k] : C(-e[k]);
  return out;
}

/// Inverse by back-substitution on t-degrees. Throws not_a_unit when the
/// constant coefficient is not invertible in C.
template <class C>
ThetaSeries<C> ts_invert(const ThetaSeries<C>& a) {
  using parasl2::inverse;
  const C c0_inv = inverse(a[0]);
  const std::size_t n = a.coefficients().size();
  ThetaSeries<C> b(a.order());
  b[0] = c0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    C acc = C(0);
    for (std::size_t i = 1; i <= k; ++i) acc = acc + a[i] * b[k - i];
    b[k] = C(-(c0_inv * acc));
  }
  return b;
}

/// (r+1)x(r+1) subdiagonal shift matrix realizing t.
template <class C = Rational>
Matrix<C> theta_shift_matrix(int order) {
  if (order < 0) throw structural_error("theta series order must be >= 0");
  const auto n = static_cast<std::size_t>(order) + 1;
  Matrix<C> m(n, n, C(0));
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = C(1);
  return m;
}

/// Lower-triangular Toeplitz matrix sum_k c_k S^k, S the shift matrix.
template <class C>
Matrix<C> ts_to_matrix(const ThetaSeries<C>& a) {
  const auto n = a.coefficients().size();
  Matrix<C> m(n, n, C(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = a[i - j];
  return m;
}

/// Replaces every entry by its t^k coefficient.
template <class C>
Matrix<C> theta_coefficient(const Matrix<ThetaSeries<C>>& m, int k) {
  return m.map([k](const ThetaSeries<C>& s) { return s[static_cast<std::size_t>(k)]; });
}

/// Lifts a coefficient matrix to constant series of order r.
template <class C>
Matrix<ThetaSeries<C>> lift(const Matrix<C>& m, int order) {
  return m.map([order](const C& x) { return ThetaSeries<C>(order, x); });
}

/// Truncated exponential of a coefficient matrix: sum_k X^k t^k / k!.
Matrix<Series> matrix_exp(const Matrix<Rational>& x, int order);

std::string to_string(const Series& s);
std::string to_string(const ThetaSeries<HPoly>& s);
std::string to_string(const ThetaSeries<LambdaPoly>& s);

/// Coefficients as "p/q" strings, lowest degree first.
std::vector<std::string> to_strings(const Series& s);

}  // namespace parasl2
