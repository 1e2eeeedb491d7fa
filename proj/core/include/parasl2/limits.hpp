#pragma once

#include <string>

#include "parasl2/matrix.hpp"
#include "parasl2/polynomial.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"
#include "parasl2/spin.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

/// [J+, J-] at q = e^{i lambda}, lambda = 2 pi n kept formal:
///   sum_{k <= r/2} (-1)^k psi_k(H) lambda^{2k} t^{2k}.
ThetaSeries<LambdaPoly> unit_circle_commutator(int order);

/// Leading lambda-coefficient ratio of sin(lambda H; t) over sin(lambda; t),
/// both truncated at order r. Equals H^K with K the largest odd K <= r.
/// Throws domain_error for r = 0 (the denominator vanishes).
HPoly sine_ratio_limit(int order);

/// Relations of the limit algebra: [H, J+-] = +-weight_shift J+-,
/// [J+, J-] = commutator.
struct NonlinearTarget {
  int order = 0;
  int weight_shift = 2;
  HPoly commutator;
  /// commutator = a H + c H^3 with c != 0
  bool higgs_type = false;
  Rational linear_coefficient;
  Rational cubic_coefficient;
  std::string relation;
};

NonlinearTarget nonlinear_target(int order);

/// Evaluator for the two-variable limit
///   [J+, J-] = (H^{r1} q^H - (-1)^{r1} q^{-H} H^{r1}) / (q - (-1)^{r1} q^{-1})
/// with [H, J+-] = +-J+- (weight shift 1, not 2).
struct TwoParamRelation {
  int r1 = 0;
  Rational q;
  int weight_shift = 1;
  std::string note;

  Rational evaluate(int h) const;
  /// Diagonal over the H-spectrum 2m of spin j.
  Matrix<Rational> target(Spin j) const;
};

/// Requires q > 0 and a nonzero denominator; throws domain_error otherwise.
TwoParamRelation two_param_relation(int r1, const Rational& q);

/// Product identity unit_circle_commutator * sin(lambda; t) = sin(lambda H; t),
/// the exponent of sine_ratio_limit, the Higgs-type shape at r = 3 and the
/// comparison between the limit and the finite-n commutator.
Report check_limits(int order);

}  // namespace parasl2
