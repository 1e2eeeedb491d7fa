#include "parasl2/limits.hpp"

#include "parasl2/errors.hpp"
#include "parasl2/psi.hpp"
#include "parasl2/sl2_rep.hpp"

namespace parasl2 {

namespace {

LambdaPoly lambda_times(const HPoly& c) { return LambdaPoly::monomial(1, c); }

int limit_exponent(int order) { return order - (1 + (order % 2 == 0 ? 1 : -1)) / 2; }

}  // namespace

ThetaSeries<LambdaPoly> unit_circle_commutator(int order) {
  if (order < 0) throw structural_error("order must be >= 0");
  const auto psi = psi_polynomials(order / 2);
  ThetaSeries<LambdaPoly> out(order);
  for (int k = 0; 2 * k <= order; ++k) {
    const HPoly c = k % 2 == 0 ? psi[static_cast<std::size_t>(k)] : -psi[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(2 * k)] = LambdaPoly::monomial(static_cast<std::size_t>(2 * k), c);
  }
  return out;
}

HPoly sine_ratio_limit(int order) {
  if (order < 1) throw domain_error("sine_ratio_limit: r must be >= 1, sin(lambda; t) vanishes at r = 0");
  const auto num = ts_sin(lambda_times(HPoly::variable()), order);
  const auto den = ts_sin(lambda_times(HPoly(1)), order);
  int top = order;
  while (top >= 0 && is_zero(den[static_cast<std::size_t>(top)])) --top;
  if (top < 0) throw domain_error("sine_ratio_limit: denominator vanishes");
  const LambdaPoly& n = num[static_cast<std::size_t>(top)];
  const LambdaPoly& d = den[static_cast<std::size_t>(top)];
  if (n.degree() != d.degree()) throw domain_error("sine_ratio_limit: leading lambda degrees differ");
  return n.leading() * inverse(d.leading());
}

NonlinearTarget nonlinear_target(int order) {
  NonlinearTarget t;
  t.order = order;
  t.commutator = sine_ratio_limit(order);
  bool in_span = t.commutator.degree() <= 3;
  for (int k = 0; k <= t.commutator.degree(); ++k)
    if (k != 1 && k != 3 && !is_zero(t.commutator[static_cast<std::size_t>(k)])) in_span = false;
  t.linear_coefficient = t.commutator[1];
  t.cubic_coefficient = t.commutator[3];
  t.higgs_type = in_span && !is_zero(t.cubic_coefficient);
  t.relation = "[H,J±] = ±2J±, [J+,J-] = " + to_string(t.commutator);
  return t;
}

Rational TwoParamRelation::evaluate(int h) const {
  const Rational sign = r1 % 2 == 0 ? Rational(1) : Rational(-1);
  const Rational hr = pow(Rational(h), r1);
  return Rational((hr * pow(q, h) - sign * pow(q, -h) * hr) / (q - sign * inverse(q)));
}

Matrix<Rational> TwoParamRelation::target(Spin j) const {
  return weight_diagonal<Rational>(j, [this](int w) { return evaluate(w); }, Rational(0));
}

TwoParamRelation two_param_relation(int r1, const Rational& q) {
  if (r1 < 0) throw domain_error("two_param_relation: r1 must be >= 0");
  if (sgn(q) <= 0) throw domain_error("two_param_relation: q must be positive");
  const Rational sign = r1 % 2 == 0 ? Rational(1) : Rational(-1);
  if (is_zero(Rational(q - sign * inverse(q))))
    throw domain_error("two_param_relation: q - (-1)^r1 q^-1 vanishes at q = " + to_string(q));
  return {r1, q, 1, "weight shift 1 kept for this relation: [H,J±] = ±J±, the other algebras use ±2J±"};
}

Report check_limits(int order) {
  const nlohmann::json base = {{"r", order}};
  Report report;

  const auto comm = unit_circle_commutator(order);
  const auto lhs = comm * ts_sin(lambda_times(HPoly(1)), order);
  const auto rhs = ts_sin(lambda_times(HPoly::variable()), order);
  Check product{"unit_circle_product_identity", base, lhs == rhs, std::nullopt};
  if (!product.passed) product.witness = Witness{{{"theta_series", "lhs"}}, to_string(lhs - rhs)};
  report.add(std::move(product));

  if (order < 1) return report;

  const HPoly limit = sine_ratio_limit(order);
  const int exponent = limit_exponent(order);
  auto params = base;
  params["limit"] = to_string(limit);
  params["expected"] = to_string(HPoly::monomial(static_cast<std::size_t>(exponent)));
  report.add(zero_check("sine_ratio_limit", params, HPoly(limit - HPoly::monomial(static_cast<std::size_t>(exponent)))));

  const NonlinearTarget target = nonlinear_target(order);
  if (order == 3) {
    Check higgs{"higgs_type_limit",
                {{"r", order}, {"relation", target.relation}, {"family", "a H + c H^3"},
                 {"a", to_string(target.linear_coefficient)}, {"c", to_string(target.cubic_coefficient)}},
                target.higgs_type && is_zero(target.linear_coefficient),
                std::nullopt};
    report.add(std::move(higgs));
  }

  const bool differ = !(comm == ThetaSeries<LambdaPoly>(order, LambdaPoly(limit)));
  Check compare{"limit_vs_finite_commutator",
                {{"r", order},
                 {"limit", to_string(limit)},
                 {"finite_n", to_string(comm)},
                 {"expected", order >= 2 ? "differ" : "agree"},
                 {"observed", differ ? "differ" : "agree"},
                 {"note", "limit read as the ratio of leading lambda coefficients"}},
                differ == (order >= 2),
                std::nullopt};
  report.add(std::move(compare));
  return report;
}

}  // namespace parasl2
