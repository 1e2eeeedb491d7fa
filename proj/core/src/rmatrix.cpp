#include "parasl2/rmatrix.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "parasl2/hopf.hpp"
#include "parasl2/sl2_rep.hpp"

namespace parasl2 {

namespace {

constexpr int kOrder = 1;

nlohmann::json pair_params(Spin j1, Spin j2, const Rational& delta) {
  return {{"j1", j1.str()}, {"j2", j2.str()}, {"delta", to_string(delta)}, {"r", kOrder}};
}

// s T (J- (x) J+ - J+ (x) J-)
TensorElement linear_part(const Presentation<Series>& p, const Rational& s) {
  const int t = p.id("T"), jp = p.id("J+"), jm = p.id("J-");
  return {{s, {Word{t, jm}, Word{jp}}}, {Rational(-s), {Word{t, jp}, Word{jm}}}};
}

TensorElement unit2() { return {{Rational(1), {Word{}, Word{}}}}; }

TensorElement embed(const TensorElement& e, std::size_t first, std::size_t second) {
  TensorElement out;
  for (const auto& t : e) {
    TensorTerm n{t.coef, {Word{}, Word{}, Word{}}};
    n.factors[first] = t.factors[0];
    n.factors[second] = t.factors[1];
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

Presentation<Series> twist_presentation(const Rational& delta) {
  Presentation<Series> p(Series(kOrder), Series(kOrder, Rational(1)));
  const Series dt = Series::monomial(kOrder, 1, delta);
  p.add({"H", [](Spin j) { return lift(build_classical(j).h, kOrder); }, {}, {}, Series(kOrder)});
  p.add({"J+", [](Spin j) { return lift(build_classical(j).jplus, kOrder); }, {}, {}, Series(kOrder)});
  p.add({"J-", [](Spin j) { return lift(build_classical(j).jminus, kOrder); }, {}, {}, Series(kOrder)});
  p.add({"T", [dt](Spin j) { return Matrix<Series>::identity(j.dim(), Series(kOrder), dt); }, {}, {}, dt});
  return p;
}

TensorElement twist_element(const Presentation<Series>& p, int sign) {
  TensorElement out = unit2();
  for (auto& t : linear_part(p, make_rational(sign, 2))) out.push_back(std::move(t));
  return out;
}

TensorElement r_element(const Presentation<Series>& p) {
  TensorElement out = unit2();
  for (auto& t : linear_part(p, Rational(1))) out.push_back(std::move(t));
  return out;
}

TensorElement plus(const Presentation<Series>& p, const TensorElement& e) {
  const int jp = p.id("J+"), jm = p.id("J-");
  TensorElement out = e;
  for (auto& t : out)
    for (auto& w : t.factors) {
      std::reverse(w.begin(), w.end());
      for (int& l : w) l = l == jp ? jm : l == jm ? jp : l;
    }
  return out;
}

Matrix<Series> build_U(Spin j1, Spin j2, const Rational& delta) {
  const auto p = twist_presentation(delta);
  return p.flatten(twist_element(p, 1), {j1, j2});
}

Matrix<Series> build_R(Spin j1, Spin j2, const Rational& delta) {
  const auto p = twist_presentation(delta);
  return p.flatten(r_element(p), {j1, j2});
}

Report check_r_matrix(Spin j1, Spin j2, const Rational& delta) {
  const auto p = twist_presentation(delta);
  const std::vector<Spin> spins{j1, j2};
  const auto params = pair_params(j1, j2, delta);
  const TensorElement u = twist_element(p, 1);
  const TensorElement u_minus = twist_element(p, -1);
  const Matrix<Series> unit = Matrix<Series>::identity(j1.dim() * j2.dim(), Series(kOrder), Series(kOrder, Rational(1)));
  Report report;
  report.add(zero_check("r_matrix_factorization", params,
                        Matrix<Series>(p.flatten(r_element(p), spins) - p.flatten(u * plus(p, u_minus), spins))));
  report.add(zero_check("twist_inverse", params, Matrix<Series>(p.flatten(u * u_minus, spins) - unit)));
  return report;
}

Report check_intertwiner(Spin j1, Spin j2, const Rational& delta) {
  const Matrix<Series> u = build_U(j1, j2, delta);
  const ClassicalRep c1 = build_classical(j1), c2 = build_classical(j2);
  const auto primitive = [&](const Matrix<Rational>& a, const Matrix<Rational>& b) {
    const auto one1 = Matrix<Rational>::identity(j1.dim(), Rational(0), Rational(1));
    const auto one2 = Matrix<Rational>::identity(j2.dim(), Rational(0), Rational(1));
    return lift(Matrix<Rational>(kron(a, one2) + kron(one1, b)), kOrder);
  };
  Report report;
  const std::pair<Generator, std::pair<const Matrix<Rational>*, const Matrix<Rational>*>> cases[] = {
      {Generator::H, {&c1.h, &c2.h}}, {Generator::JPlus, {&c1.jplus, &c2.jplus}}, {Generator::JMinus, {&c1.jminus, &c2.jminus}}};
  const char* names[] = {"H", "J+", "J-"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [g, mats] = cases[i];
    const Matrix<Series> d0 = primitive(*mats.first, *mats.second);
    const Matrix<Series> d1 = coproduct(g, j1, j2, delta, kOrder);
    auto params = pair_params(j1, j2, delta);
    params["generator"] = names[i];
    report.add(zero_check("intertwiner", params, Matrix<Series>(u * d0 - d1 * u)));
  }
  return report;
}

Report check_ybe(Spin j, const Rational& delta) {
  const auto p = twist_presentation(delta);
  const TensorElement r = r_element(p);
  const TensorElement r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2);
  const std::vector<Spin> spins{j, j, j};
  const Matrix<Series> lhs = p.flatten(r12, spins) * p.flatten(r13, spins) * p.flatten(r23, spins);
  const Matrix<Series> rhs = p.flatten(r23, spins) * p.flatten(r13, spins) * p.flatten(r12, spins);
  Report report;
  report.add(zero_check("yang_baxter", {{"j", j.str()}, {"delta", to_string(delta)}, {"r", kOrder}},
                        Matrix<Series>(lhs - rhs)));
  return report;
}

std::string format_entry(const Series& s, const Rational& delta) {
  const Rational b = is_zero(delta) ? Rational(0) : Rational(s[1] / delta);
  return fmt::format("{} + {}·δθ", to_string(s[0]), to_string(b));
}

std::vector<std::vector<std::string>> format_matrix(const Matrix<Series>& m, const Rational& delta) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) out[i].push_back(format_entry(m(i, k), delta));
  return out;
}

}  // namespace parasl2
