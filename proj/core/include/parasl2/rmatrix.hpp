#pragma once

#include <string>
#include <vector>

#include "parasl2/matrix.hpp"
#include "parasl2/presentation.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"
#include "parasl2/spin.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

/// Letters H, J+, J- (classical matrices, order 1) and T = delta*theta times
/// the identity. Used for the order-1 twist and R-matrix.
Presentation<Series> twist_presentation(const Rational& delta);

/// U_{s theta} = 1 (x) 1 + (s/2) T (J- (x) J+ - J+ (x) J-), s = +1 or -1.
TensorElement twist_element(const Presentation<Series>& p, int sign);

/// R_theta = 1 (x) 1 + T (J- (x) J+ - J+ (x) J-).
TensorElement r_element(const Presentation<Series>& p);

/// Linear antiautomorphism exchanging J+ and J-, fixing H and T, applied
/// to each tensor factor (words reversed).
TensorElement plus(const Presentation<Series>& p, const TensorElement& e);

Matrix<Series> build_U(Spin j1, Spin j2, const Rational& delta);
Matrix<Series> build_R(Spin j1, Spin j2, const Rational& delta);

/// R = U_theta plus(U_{-theta}) entrywise and U_theta U_{-theta} = 1.
Report check_r_matrix(Spin j1, Spin j2, const Rational& delta);

/// U_theta D_0(a) = D_1(a) U_theta for a in {H, J+, J-}, where D_0 is the
/// primitive coproduct and D_1 the order-1 deformed one.
Report check_intertwiner(Spin j1, Spin j2, const Rational& delta);

/// R12 R13 R23 = R23 R13 R12 on V_j (x) V_j (x) V_j.
Report check_ybe(Spin j, const Rational& delta);

/// Entry of an order-1 matrix as "a + b·δθ".
std::string format_entry(const Series& s, const Rational& delta);
std::vector<std::vector<std::string>> format_matrix(const Matrix<Series>& m, const Rational& delta);

}  // namespace parasl2
