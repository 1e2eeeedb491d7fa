#pragma once

#include "parasl2/bi_theta.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"

namespace parasl2 {

/// Nilpotent element t with exp(d1 t1) exp(d2 t2) = exp(t), built from the
/// truncated composition formula (chains (ad A)^m B and (ad B)^m A only).
struct ComposedTheta {
  BiSeries value;
  Rational delta1;
  Rational delta2;
  int order1 = 0;
  int order2 = 0;
};

/// (ad A)^m (B) = [A, [A, ..., [A, B]...]], m >= 1.
BiSeries adjoint_power(const BiSeries& a, const BiSeries& b, int m);

/// t = d1 t1 + d2 t2
///     + 1/2 sum_{m=1}^{r1} 2^m d2 d1^m / (m+1)! t1^m t2
///     + 1/2 sum_{m=1}^{r2} 2^m d1 d2^m / (m+1)! t1 t2^m
ComposedTheta compose_theta(const Rational& delta1, const Rational& delta2, int order1, int order2);

/// The same truncated formula with the roles of the factors exchanged,
/// targeting exp(d2 t2) exp(d1 t1). Monomials are reordered with bt_mul.
BiSeries compose_theta_reversed(const Rational& delta1, const Rational& delta2, int order1, int order2);

/// Compares exp(d1 t1) exp(d2 t2) with exp(compose_theta(...)). On mismatch
/// the witness is the first differing bidegree; params carry every
/// differing bidegree with both coefficient values.
Report check_exp_identity(const Rational& delta1, const Rational& delta2, int order1, int order2);

}  // namespace parasl2
