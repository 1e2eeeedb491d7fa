#pragma once

#include <vector>

#include "parasl2/bi_theta.hpp"
#include "parasl2/cbh.hpp"
#include "parasl2/matrix.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"
#include "parasl2/spin.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

/// Generators H, J+, J- of a spin-j representation. Basis |m>, m = j ... -j
/// (descending), with
///   H|m> = 2m|m>,  J+|m> = [j-m]|m+1>,  J-|m> = [j+m]|m-1>
/// where [n] is the plain integer (classical) or a truncated q-number.
template <class T>
struct Sl2Generators {
  Spin spin;
  Matrix<T> h;
  Matrix<T> jplus;
  Matrix<T> jminus;
};

using ClassicalRep = Sl2Generators<Rational>;
using DeformedRep = Sl2Generators<Series>;
using TwoParamRep = Sl2Generators<BiSeries>;

ClassicalRep build_classical(Spin j);

/// Deformed generators of order r: matrix elements are sinh_ratio(n, delta, r).
DeformedRep build_deformed(Spin j, const Rational& delta, int order);

/// J^(k) = (t^k coefficient of a) / delta^k. Requires 0 <= k <= r and delta != 0.
Matrix<Rational> taylor_component(const Matrix<Series>& a, int k, const Rational& delta);

/// sum_k delta^k t^k J^(k), the inverse of taylor_component.
Matrix<Series> reassemble(const std::vector<Matrix<Rational>>& components, const Rational& delta);

/// Diagonal matrix f(2m) over the weights of spin j.
template <class T, class F>
Matrix<T> weight_diagonal(Spin j, F&& f, const T& zero) {
  std::vector<T> diag;
  for (int w : j.weights()) diag.push_back(f(w));
  return Matrix<T>::diagonal(diag, zero);
}

/// Defining relations of the order-r deformed algebra on spin j: weight
/// grading, the commutator in psi-series and denominator-multiplied form,
/// the graded component sums, and the r = 0 / r = 2 worked cases.
Report check_defining_relations(Spin j, const Rational& delta, int order);

/// J = sum_m t^m J^(m) with t the composed nilpotent element; the sum stops
/// where t^m vanishes. The Taylor components J^(m) are delta-independent.
TwoParamRep build_two_param(Spin j, const ComposedTheta& theta);

/// Weight grading and the two-variable commutator relation in
/// denominator-multiplied form:
///   [J+, J-] * (e(d1;t1) e(d2;t2) - e(-d2;t2) e(-d1;t1))
///     = e(H d1;t1) e(H d2;t2) - e(-H d2;t2) e(-H d1;t1).
Report check_two_param_relations(Spin j, const Rational& delta1, const Rational& delta2, int order1, int order2);

}  // namespace parasl2
