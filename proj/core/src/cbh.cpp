#include "parasl2/cbh.hpp"

#include "parasl2/errors.hpp"

namespace parasl2 {

BiSeries adjoint_power(const BiSeries& a, const BiSeries& b, int m) {
  if (m < 1) throw domain_error("adjoint_power: m must be >= 1");
  BiSeries out = b;
  for (int i = 0; i < m; ++i) out = a * out - out * a;
  return out;
}

namespace {

// 1/2 * 2^m / (m+1)!
Rational chain_weight(int m) { return pow(Rational(2), m - 1) / factorial(static_cast<unsigned>(m + 1)); }

}  // namespace

ComposedTheta compose_theta(const Rational& delta1, const Rational& delta2, int order1, int order2) {
  BiSeries t(order1, order2);
  if (order1 >= 1) t.at(1, 0) = delta1;
  if (order2 >= 1) t.at(0, 1) = delta2;
  if (order2 >= 1)
    for (int m = 1; m <= order1; ++m) t.at(m, 1) += chain_weight(m) * delta2 * pow(delta1, m);
  if (order1 >= 1)
    for (int m = 1; m <= order2; ++m) t.at(1, m) += chain_weight(m) * delta1 * pow(delta2, m);
  return {t, delta1, delta2, order1, order2};
}

BiSeries compose_theta_reversed(const Rational& delta1, const Rational& delta2, int order1, int order2) {
  const auto mono = [&](int a, int b) { return BiSeries::monomial(order1, order2, a, b); };
  BiSeries t = mono(1, 0) * delta1 + mono(0, 1) * delta2;
  // Chains (ad t2)^m t1 ~ t2^m t1 and (ad t1)^m t2 ~ t2 t1^m, written in
  // the product order of the reversed factors.
  for (int m = 1; m <= order2; ++m)
    t += mono(0, m) * mono(1, 0) * (chain_weight(m) * delta1 * pow(delta2, m));
  for (int m = 1; m <= order1; ++m)
    t += mono(0, 1) * mono(m, 0) * (chain_weight(m) * delta2 * pow(delta1, m));
  return t;
}

Report check_exp_identity(const Rational& delta1, const Rational& delta2, int order1, int order2) {
  const BiSeries lhs = bt_exp_generator(delta1, 1, order1, order2) * bt_exp_generator(delta2, 2, order1, order2);
  const BiSeries rhs = bt_exp(compose_theta(delta1, delta2, order1, order2).value);

  nlohmann::json params = {{"delta1", to_string(delta1)}, {"delta2", to_string(delta2)},
                           {"r1", order1}, {"r2", order2}};
  nlohmann::json mismatches = nlohmann::json::array();
  for (int a = 0; a <= order1; ++a)
    for (int b = 0; b <= order2; ++b)
      if (lhs.at(a, b) != rhs.at(a, b))
        mismatches.push_back({{"bidegree", {a, b}},
                              {"product_of_exponentials", to_string(lhs.at(a, b))},
                              {"exponential_of_composed", to_string(rhs.at(a, b))}});
  if (!mismatches.empty()) params["mismatches"] = mismatches;

  Report report;
  report.add(zero_check("cbh_exp_identity", params, BiSeries(lhs - rhs)));

  const BiSeries lhs_rev = bt_exp_generator(delta2, 2, order1, order2) * bt_exp_generator(delta1, 1, order1, order2);
  const BiSeries rhs_rev = bt_exp(compose_theta_reversed(delta1, delta2, order1, order2));
  report.add(zero_check("cbh_exp_identity_reversed",
                        {{"delta1", to_string(delta1)}, {"delta2", to_string(delta2)}, {"r1", order1}, {"r2", order2}},
                        BiSeries(lhs_rev - rhs_rev)));
  return report;
}

}  // namespace parasl2
