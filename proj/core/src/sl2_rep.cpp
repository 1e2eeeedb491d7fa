#include "parasl2/sl2_rep.hpp"

#include <stdexcept>
#include <string>

#include "parasl2/errors.hpp"
#include "parasl2/psi.hpp"

namespace parasl2 {

namespace {

nlohmann::json base_params(Spin j, const Rational& delta, int order) {
  return {{"j", j.str()}, {"delta", to_string(delta)}, {"r", order}};
}

nlohmann::json with(nlohmann::json params, const nlohmann::json& extra) {
  params.update(extra);
  return params;
}

// Builds H, J+, J- on spin j from a matrix-element function n -> [n].
template <class T, class Q>
Sl2Generators<T> weight_realization(Spin j, Q&& qnum, const T& zero) {
  const std::size_t d = j.dim();
  Sl2Generators<T> g{j, Matrix<T>(d, d, zero), Matrix<T>(d, d, zero), Matrix<T>(d, d, zero)};
  const auto w = j.weights();
  for (std::size_t i = 0; i < d; ++i) {
    g.h(i, i) = qnum(w[i], true);
    if (i > 0) g.jplus(i - 1, i) = qnum(static_cast<int>(i), false);                         // j - m = i
    if (i + 1 < d) g.jminus(i + 1, i) = qnum(j.twice() - static_cast<int>(i), false);      // j + m = 2j - i
  }
  return g;
}

}  // namespace

ClassicalRep build_classical(Spin j) {
  return weight_realization<Rational>(
      j, [](int n, bool) { return Rational(n); }, Rational(0));
}

DeformedRep build_deformed(Spin j, const Rational& delta, int order) {
  if (order < 0) throw structural_error("order must be >= 0");
  return weight_realization<Series>(
      j,
      [&](int n, bool is_cartan) { return is_cartan ? Series(order, Rational(n)) : sinh_ratio(Rational(n), delta, order); },
      Series(order));
}

Matrix<Rational> taylor_component(const Matrix<Series>& a, int k, const Rational& delta) {
  const int order = a.data().empty() ? 0 : a(0, 0).order();
  if (k < 0 || k > order)
    throw std::out_of_range("taylor_component: k=" + std::to_string(k) + " outside [0, " + std::to_string(order) + "]");
  if (is_zero(delta)) throw domain_error("taylor_component: delta must be nonzero");
  return theta_coefficient(a, k) * inverse(pow(delta, k));
}

Matrix<Series> reassemble(const std::vector<Matrix<Rational>>& components, const Rational& delta) {
  if (components.empty()) throw structural_error("reassemble: no components");
  const int order = static_cast<int>(components.size()) - 1;
  const auto& first = components.front();
  Matrix<Series> out(first.rows(), first.cols(), Series(order));
  for (int k = 0; k <= order; ++k) {
    const Rational w = pow(delta, k);
    const auto& c = components[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t l = 0; l < c.cols(); ++l) out(i, l)[static_cast<std::size_t>(k)] = c(i, l) * w;
  }
  return out;
}

Report check_defining_relations(Spin j, const Rational& delta, int order) {
  const auto base = base_params(j, delta, order);
  const DeformedRep rep = build_deformed(j, delta, order);
  const ClassicalRep classical = build_classical(j);
  const Series zero(order);
  Report report;

  report.add(zero_check("weight_grading", with(base, {{"generator", "J+"}}),
                        Matrix<Series>(commutator(rep.h, rep.jplus) - rep.jplus * Rational(2))));
  report.add(zero_check("weight_grading", with(base, {{"generator", "J-"}}),
                        Matrix<Series>(commutator(rep.h, rep.jminus) + rep.jminus * Rational(2))));

  const Matrix<Series> comm = commutator(rep.jplus, rep.jminus);

  // [J+, J-] (e(d) - e(-d)) = e(Hd) - e(-Hd)
  const Series den = ts_exp(delta, order) - ts_exp(Rational(-delta), order);
  const Matrix<Series> num = matrix_exp(classical.h * delta, order) - matrix_exp(classical.h * Rational(-delta), order);
  report.add(zero_check("commutator_product_form", base, Matrix<Series>(comm.scaled_right(den) - num)));

  // [J+, J-] = sum_k psi_k(H) d^{2k} t^{2k}
  const auto psi = psi_polynomials(order / 2);
  const Matrix<Series> psi_series = weight_diagonal<Series>(
      j,
      [&](int w) {
        Series s(order);
        for (int k = 0; 2 * k <= order; ++k)
          s[static_cast<std::size_t>(2 * k)] = psi[static_cast<std::size_t>(k)].evaluate(Rational(w)) * pow(delta, 2 * k);
        return s;
      },
      zero);
  report.add(zero_check("commutator_psi_series", base, Matrix<Series>(comm - psi_series)));

  if (is_zero(delta)) return report;

  std::vector<Matrix<Rational>> jp, jm;
  for (int k = 0; k <= order; ++k) {
    jp.push_back(taylor_component(rep.jplus, k, delta));
    jm.push_back(taylor_component(rep.jminus, k, delta));
  }
  report.add(zero_check("taylor_reassembly", with(base, {{"generator", "J+"}}), Matrix<Series>(reassemble(jp, delta) - rep.jplus)));
  report.add(zero_check("taylor_reassembly", with(base, {{"generator", "J-"}}), Matrix<Series>(reassemble(jm, delta) - rep.jminus)));

  const auto mixed_sum = [&](const std::vector<Matrix<Rational>>& a, const std::vector<Matrix<Rational>>& b, int n) {
    Matrix<Rational> acc = commutator(a[0], b[static_cast<std::size_t>(n)]);
    for (int m = 1; m <= n; ++m) acc += commutator(a[static_cast<std::size_t>(m)], b[static_cast<std::size_t>(n - m)]);
    return acc;
  };

  for (int k = 0; 2 * k <= order; ++k) {
    const auto target = weight_diagonal<Rational>(
        j, [&](int w) { return psi[static_cast<std::size_t>(k)].evaluate(Rational(w)); }, Rational(0));
    report.add(zero_check("graded_even_sum", with(base, {{"k", k}}), Matrix<Rational>(mixed_sum(jp, jm, 2 * k) - target)));
  }
  for (int k = 0; 2 * k + 1 <= order; ++k)
    report.add(zero_check("graded_odd_sum", with(base, {{"k", k}}), mixed_sum(jp, jm, 2 * k + 1)));
  for (int n = 0; n <= order; ++n) {
    report.add(zero_check("graded_like_sign_sum", with(base, {{"generator", "J+"}, {"k", n}}), mixed_sum(jp, jp, n)));
    report.add(zero_check("graded_like_sign_sum", with(base, {{"generator", "J-"}, {"k", n}}), mixed_sum(jm, jm, n)));
  }

  if (order == 0) {
    const Matrix<Series> classical_diff = (rep.jplus - lift(classical.jplus, 0)) + (rep.jminus - lift(classical.jminus, 0));
    report.add(zero_check("classical_limit", with(base, {{"relation", "J(theta) = J, [J+,J-] = H"}}),
                          Matrix<Series>(classical_diff + (comm - lift(classical.h, 0)))));
  }

  if (order >= 2) {
    const auto target = weight_diagonal<Rational>(
        j, [&](int w) { return Rational(Rational(Rational(w) * w * w - w) / 6 * delta * delta); }, Rational(0));
    report.add(zero_check(
        "higgs_theta2_coefficient",
        with(base, {{"relation", "theta^2 coefficient of [J+,J-] = delta^2 (H^3 - H)/3!"},
                    {"note", "direct expansion gives delta^2, not delta^3"}}),
        Matrix<Rational>(theta_coefficient(comm, 2) - target)));
  }
  return report;
}

TwoParamRep build_two_param(Spin j, const ComposedTheta& theta) {
  const int r1 = theta.order1;
  const int r2 = theta.order2;
  const int max_power = r1 + r2;
  const DeformedRep unit = build_deformed(j, Rational(1), max_power);

  std::vector<BiSeries> powers{BiSeries(r1, r2, Rational(1))};
  for (int m = 1; m <= max_power; ++m) powers.push_back(powers.back() * theta.value);

  const std::size_t d = j.dim();
  const BiSeries zero(r1, r2);
  TwoParamRep out{j, Matrix<BiSeries>(d, d, zero), Matrix<BiSeries>(d, d, zero), Matrix<BiSeries>(d, d, zero)};
  for (int m = 0; m <= max_power; ++m) {
    const auto cp = taylor_component(unit.jplus, m, Rational(1));
    const auto cm = taylor_component(unit.jminus, m, Rational(1));
    const auto& tm = powers[static_cast<std::size_t>(m)];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (!is_zero(cp(a, b))) out.jplus(a, b) += tm * cp(a, b);
        if (!is_zero(cm(a, b))) out.jminus(a, b) += tm * cm(a, b);
      }
  }
  const auto w = j.weights();
  for (std::size_t a = 0; a < d; ++a) out.h(a, a) = BiSeries(r1, r2, Rational(w[a]));
  return out;
}

Report check_two_param_relations(Spin j, const Rational& delta1, const Rational& delta2, int order1, int order2) {
  const nlohmann::json base = {{"j", j.str()}, {"delta1", to_string(delta1)}, {"delta2", to_string(delta2)},
                               {"r1", order1}, {"r2", order2}};
  const auto theta = compose_theta(delta1, delta2, order1, order2);
  const TwoParamRep rep = build_two_param(j, theta);
  const auto e = [&](const Rational& x, int which) { return bt_exp_generator(x, which, order1, order2); };
  Report report;

  report.add(zero_check("weight_grading", with(base, {{"generator", "J+"}}),
                        Matrix<BiSeries>(commutator(rep.h, rep.jplus) - rep.jplus * Rational(2))));
  report.add(zero_check("weight_grading", with(base, {{"generator", "J-"}}),
                        Matrix<BiSeries>(commutator(rep.h, rep.jminus) + rep.jminus * Rational(2))));

  const BiSeries den = e(delta1, 1) * e(delta2, 2) - e(Rational(-delta2), 2) * e(Rational(-delta1), 1);
  const Matrix<BiSeries> num = weight_diagonal<BiSeries>(
      j,
      [&](int w) {
        const Rational h(w);
        return BiSeries(e(Rational(h * delta1), 1) * e(Rational(h * delta2), 2) -
                        e(Rational(-h * delta2), 2) * e(Rational(-h * delta1), 1));
      },
      BiSeries(order1, order2));
  const Matrix<BiSeries> comm = commutator(rep.jplus, rep.jminus);
  report.add(zero_check("two_param_commutator_product_form", base, Matrix<BiSeries>(comm.scaled_right(den) - num)));
  return report;
}

}  // namespace parasl2
