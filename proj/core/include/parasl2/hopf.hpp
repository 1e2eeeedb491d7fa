#pragma once

#include <string>
#include <vector>

#include "parasl2/bi_theta.hpp"
#include "parasl2/matrix.hpp"
#include "parasl2/presentation.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"
#include "parasl2/spin.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

/// Paragrassmannian tensor product of two representation matrices: theta
/// degrees of the two factors add and truncate at the common order.
Matrix<Series> bar_tensor(const Matrix<Series>& a, const Matrix<Series>& b);

enum class Generator {
  One,
  H,
  JPlus,
  JMinus,
  KPlus,  ///< e(H delta / 2; theta)
};

Generator parse_generator(const std::string& tag);

/// Letters: H, J+, J-, K+ = e(H d/2; t), K- = e(-H d/2; t) and the theta
/// scalars E+ = e(d; t), E- = e(-d; t). Coproduct
///   D(H)  = H (x) 1 + 1 (x) H
///   D(J)  = J (x) K+ + K- (x) J
///   D(K)  = K (x) K
/// counit 0 on H, J and 1 on K, antipode S(H) = -H, S(J+-) = -E+- J+-,
/// S(K+-) = K-+.
Presentation<Series> single_variable_presentation(const Rational& delta, int order);

/// Letters H, J+, J-, K1+-, K2+- (= e(+-H d_i/2; t_i)) and E1+-, E2+-
/// (= e(+-d_i; t_i)) with
///   D(J) = J (x) K1+ K2+ + K2- K1- (x) J
///   S(J) = -K1+ K2+ J K2- K1-.
/// J is built from the composed nilpotent element of the two variables.
Presentation<BiSeries> two_parameter_presentation(const Rational& delta1, const Rational& delta2, int order1,
                                                  int order2);

/// Image of a generator under the coproduct on V_{j1} (x) V_{j2}.
Matrix<Series> coproduct(Generator g, Spin j1, Spin j2, const Rational& delta, int order);

/// Counit value in the theta-scalars.
Series counit(Generator g, const Rational& delta, int order);

/// Antipode image of a generator on V_j.
Matrix<Series> antipode(Generator g, Spin j, const Rational& delta, int order);

/// Hopf axiom battery for the single-variable structure with every tensor
/// factor carrying spin j: coassociativity, counit, antipode, relation
/// preservation under coproduct/counit/antipode, group-likeness of K+,
/// cocommutativity (expected only when the deformation is trivial) and
/// S^2 = Ad(e(H d; t)).
Report check_hopf_axioms(Spin j, const Rational& delta, int order);

/// Same battery with factor spins j1, j2, j3 (j3 used for coassociativity).
Report check_hopf_axioms(Spin j1, Spin j2, Spin j3, const Rational& delta, int order);

/// Axiom battery for the two-variable structure. Outcomes are computed and
/// reported; none is assumed.
Report two_param_hopf(Spin j, const Rational& delta1, const Rational& delta2, int order1, int order2);

}  // namespace parasl2
