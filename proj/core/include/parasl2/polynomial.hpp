#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "parasl2/rational.hpp"

namespace parasl2 {

/// Dense univariate polynomial over a commutative ring C. Index i of the
/// coefficient vector holds the coefficient of x^i. Trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients and degree -1.
///
/// `Var` is a tag type supplying the printed variable name.
template <class C, class Var>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  Polynomial(C constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(implicit)
  Polynomial(int constant) : Polynomial(C(constant)) {}               // NOLINT(implicit)
  Polynomial(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The polynomial x^k.
  static Polynomial monomial(std::size_t k, C coefficient = C(1)) {
    std::vector<C> c(k + 1, C(0));
    c[k] = std::move(coefficient);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k (zero past the degree).
  C operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
  const C& leading() const { return coeffs_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc = X(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<C> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(C(-x));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> c(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Scaling by an exact rational (applies to every coefficient).
  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    std::vector<C> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(C(x * s));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }
  friend Polynomial operator/(const Polynomial& a, const Rational& s) { return a * inverse(s); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_coeff(const C& c) {
    using parasl2::is_zero;
    return is_zero(c);
  }

  std::vector<C> coeffs_;
};

template <class C, class V>
bool is_zero(const Polynomial<C, V>& p) {
  return p.is_zero();
}
template <class C, class V>
Polynomial<C, V> one_like(const Polynomial<C, V>&) {
  return Polynomial<C, V>(C(1));
}
template <class C, class V>
Polynomial<C, V> zero_like(const Polynomial<C, V>&) {
  return {};
}

/// Only constant polynomials with an invertible constant are units.
template <class C, class V>
Polynomial<C, V> inverse(const Polynomial<C, V>& p) {
  if (p.degree() != 0) throw not_a_unit("not a unit: polynomial of degree " + std::to_string(p.degree()));
  using parasl2::inverse;
  return Polynomial<C, V>(inverse(p.leading()));
}

struct HVar {
  static constexpr const char* name = "H";
};
struct LambdaVar {
  static constexpr const char* name = "lambda";
};

/// Polynomial in the Cartan symbol H.
using HPoly = Polynomial<Rational, HVar>;

/// Polynomial in the formal symbol lambda (standing for 2*pi*n) with
/// coefficients in HPoly.
using LambdaPoly = Polynomial<HPoly, LambdaVar>;

/// Formats over a common denominator, e.g. "(3*H^5 - 10*H^3 + 7*H)/360".
std::string to_string(const HPoly& p);

/// Terms in descending lambda-degree, e.g. "-(H^3 - H)/6*lambda^2 + H".
std::string to_string(const LambdaPoly& p);

}  // namespace parasl2
