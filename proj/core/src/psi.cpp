#include "parasl2/psi.hpp"

#include <cstddef>

#include "parasl2/errors.hpp"

namespace parasl2 {

std::vector<HPoly> psi_polynomials(int k_max) {
  if (k_max < 0) throw domain_error("psi_polynomials: k_max must be >= 0");
  const auto n = static_cast<std::size_t>(k_max) + 1;

  // sinh(dH)/d = sum_n x^n H^{2n+1}/(2n+1)!  and  sinh(d)/d = sum_n x^n/(2n+1)!
  // with x = d^2; the quotient's x^k coefficient is psi_k.
  std::vector<HPoly> num;
  std::vector<Rational> den;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational inv_fact = inverse(factorial(static_cast<unsigned>(2 * i + 1)));
    num.push_back(HPoly::monomial(2 * i + 1, inv_fact));
    den.push_back(inv_fact);
  }

  std::vector<HPoly> psi;
  psi.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    HPoly acc = num[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= psi[k - i] * den[i];
    psi.push_back(acc / den[0]);
  }
  return psi;
}

Series sinh_ratio(const Rational& a, const Rational& delta, int order) {
  const auto psi = psi_polynomials(order / 2);
  Series out(order);
  for (int k = 0; 2 * k <= order; ++k)
    out[static_cast<std::size_t>(2 * k)] = psi[static_cast<std::size_t>(k)].evaluate(a) * pow(delta, 2 * k);
  return out;
}

ThetaSeries<HPoly> sinh_ratio(const HPoly& a, const Rational& delta, int order) {
  const auto psi = psi_polynomials(order / 2);
  ThetaSeries<HPoly> out(order);
  for (int k = 0; 2 * k <= order; ++k)
    out[static_cast<std::size_t>(2 * k)] = psi[static_cast<std::size_t>(k)].compose(a) * pow(delta, 2 * k);
  return out;
}

Report check_psi_division(int k_max) {
  const auto psi = psi_polynomials(k_max);
  Report report;
  for (int n = 0; n <= k_max; ++n) {
    HPoly product;
    for (int i = 0; i <= n; ++i)
      product += psi[static_cast<std::size_t>(n - i)] * inverse(factorial(static_cast<unsigned>(2 * i + 1)));
    const HPoly target = HPoly::monomial(static_cast<std::size_t>(2 * n + 1), inverse(factorial(static_cast<unsigned>(2 * n + 1))));
    report.add(zero_check("psi_division_identity", {{"k_max", k_max}, {"delta_power", 2 * n}}, HPoly(product - target)));
  }
  return report;
}

}  // namespace parasl2
