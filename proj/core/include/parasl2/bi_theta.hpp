#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "parasl2/errors.hpp"
#include "parasl2/rational.hpp"

namespace parasl2 {

/// Truncated series in two mutually anticommuting nilpotent variables
/// t1, t2 with t1^{r1+1} = t2^{r2+1} = 0 and t1 t2 = -t2 t1. Monomials are
/// stored in the normal order t1^a t2^b, so
///
///   (t1^a t2^b)(t1^c t2^d) = (-1)^{b c} t1^{a+c} t2^{b+d}.
///
/// Coefficients commute with both variables.
template <class C>
class BiTheta {
 public:
  using coefficient_type = C;

  BiTheta() : BiTheta(0, 0) {}
  BiTheta(int order1, int order2) : r1_(order1), r2_(order2) {
    if (order1 < 0 || order2 < 0) throw structural_error("bi-theta orders must be >= 0");
    coeffs_.assign(static_cast<std::size_t>((r1_ + 1) * (r2_ + 1)), C(0));
  }
  BiTheta(int order1, int order2, C constant) : BiTheta(order1, order2) { at(0, 0) = std::move(constant); }

  /// c * t1^a t2^b (zero when outside the truncation box).
  static BiTheta monomial(int order1, int order2, int a, int b, C c = C(1)) {
    BiTheta s(order1, order2);
    if (a < 0 || b < 0) throw structural_error("negative bi-theta degree");
    if (a <= order1 && b <= order2) s.at(a, b) = std::move(c);
    return s;
  }
  static BiTheta theta1(int order1, int order2) { return monomial(order1, order2, 1, 0); }
  static BiTheta theta2(int order1, int order2) { return monomial(order1, order2, 0, 1); }

  int order1() const { return r1_; }
  int order2() const { return r2_; }

  const C& at(int a, int b) const { return coeffs_.at(index(a, b)); }
  C& at(int a, int b) { return coeffs_.at(index(a, b)); }

  bool is_zero() const {
    using parasl2::is_zero;
    for (const auto& c : coeffs_)
      if (!is_zero(c)) return false;
    return true;
  }

  BiTheta& operator+=(const BiTheta& o) {
    check_orders(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  BiTheta& operator-=(const BiTheta& o) {
    check_orders(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }
  friend BiTheta operator+(BiTheta a, const BiTheta& b) { return a += b; }
  friend BiTheta operator-(BiTheta a, const BiTheta& b) { return a -= b; }
  friend BiTheta operator-(const BiTheta& a) {
    BiTheta out(a.r1_, a.r2_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = C(-a.coeffs_[i]);
    return out;
  }

  friend BiTheta operator*(const BiTheta& x, const BiTheta& y) {
    x.check_orders(y);
    BiTheta out(x.r1_, x.r2_);
    using parasl2::is_zero;
    for (int a = 0; a <= x.r1_; ++a)
      for (int b = 0; b <= x.r2_; ++b) {
        const C& u = x.at(a, b);
        if (is_zero(u)) continue;
        for (int c = 0; a + c <= x.r1_; ++c)
          for (int d = 0; b + d <= x.r2_; ++d) {
            const C& v = y.at(c, d);
            if (is_zero(v)) continue;
            C term = u * v;
            if ((b * c) % 2 == 1)
              out.at(a + c, b + d) = out.at(a + c, b + d) - term;
            else
              out.at(a + c, b + d) = out.at(a + c, b + d) + term;
          }
      }
    return out;
  }
  BiTheta& operator*=(const BiTheta& o) { return *this = *this * o; }

  friend BiTheta operator*(const BiTheta& a, const Rational& s) {
    BiTheta out(a.r1_, a.r2_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = C(a.coeffs_[i] * s);
    return out;
  }
  friend BiTheta operator*(const Rational& s, const BiTheta& a) { return a * s; }

  friend bool operator==(const BiTheta& a, const BiTheta& b) {
    return a.r1_ == b.r1_ && a.r2_ == b.r2_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const BiTheta& a, const BiTheta& b) { return !(a == b); }

 private:
  std::size_t index(int a, int b) const {
    if (a < 0 || b < 0 || a > r1_ || b > r2_)
      throw structural_error("bi-theta degree (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    return static_cast<std::size_t>(a * (r2_ + 1) + b);
  }
  void check_orders(const BiTheta& o) const {
    if (o.r1_ != r1_ || o.r2_ != r2_)
      throw structural_error("bi-theta order mismatch: (" + std::to_string(r1_) + "," + std::to_string(r2_) +
                             ") vs (" + std::to_string(o.r1_) + "," + std::to_string(o.r2_) + ")");
  }

  int r1_ = 0;
  int r2_ = 0;
  std::vector<C> coeffs_;
};

using BiSeries = BiTheta<Rational>;

template <class C>
bool is_zero(const BiTheta<C>& s) {
  return s.is_zero();
}
template <class C>
BiTheta<C> one_like(const BiTheta<C>& s) {
  return BiTheta<C>(s.order1(), s.order2(), C(1));
}
template <class C>
BiTheta<C> zero_like(const BiTheta<C>& s) {
  return BiTheta<C>(s.order1(), s.order2());
}

/// Exponential of a nilpotent element (zero constant term); the series
/// stops at the first vanishing power. Throws domain_error otherwise.
template <class C>
BiTheta<C> bt_exp(const BiTheta<C>& x) {
  using parasl2::is_zero;
  if (!is_zero(x.at(0, 0))) throw domain_error("bt_exp: argument has a nonzero constant term (not nilpotent)");
  BiTheta<C> out = one_like(x);
  BiTheta<C> power = one_like(x);
  for (unsigned k = 1;; ++k) {
    power = power * x * inverse(Rational(k));
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

/// Exponential of a constant multiple of one generator, x * t_i, truncated
/// by that generator's order.
template <class C>
BiTheta<C> bt_exp_generator(const C& x, int which, int order1, int order2) {
  const BiTheta<C> t = which == 1 ? BiTheta<C>::theta1(order1, order2) : BiTheta<C>::theta2(order1, order2);
  return bt_exp(t * BiTheta<C>(order1, order2, x));
}

std::string to_string(const BiSeries& s);

/// Row a holds the coefficients of t1^a t2^0 ... t1^a t2^{r2}.
std::vector<std::vector<std::string>> to_strings(const BiSeries& s);

}  // namespace parasl2
