#pragma once

#include <vector>

#include "parasl2/polynomial.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

/// psi_0 ... psi_{k_max}: the polynomials with
///   sinh(d H) / sinh(d) = sum_k psi_k(H) d^{2k}
/// as formal power series in d, obtained by exact long division of the
/// two odd series (after cancelling one power of d).
std::vector<HPoly> psi_polynomials(int k_max);

/// sum_{k=0}^{floor(r/2)} psi_k(a) d^{2k} t^{2k}, the truncated q-number
/// of a. Satisfies
///   sinh_ratio(a) * (e(d;t) - e(-d;t)) = e(a d;t) - e(-a d;t).
Series sinh_ratio(const Rational& a, const Rational& delta, int order);

/// Same with a polynomial argument (typically a = H).
ThetaSeries<HPoly> sinh_ratio(const HPoly& a, const Rational& delta, int order);

/// Multiplies the quotient back: for every n <= k_max the d^{2n}
/// coefficient of (sinh(d)/d) * sum_k psi_k d^{2k} must equal H^{2n+1}/(2n+1)!.
Report check_psi_division(int k_max);

}  // namespace parasl2
