#include "parasl2/hopf.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "parasl2/cbh.hpp"
#include "parasl2/sl2_rep.hpp"

namespace parasl2 {

Matrix<Series> bar_tensor(const Matrix<Series>& a, const Matrix<Series>& b) {
  if (!a.data().empty() && !b.data().empty() && a(0, 0).order() != b(0, 0).order())
    throw structural_error("bar_tensor: factors have orders " + std::to_string(a(0, 0).order()) + " and " +
                           std::to_string(b(0, 0).order()));
  return kron(a, b);
}

Generator parse_generator(const std::string& tag) {
  if (tag == "1") return Generator::One;
  if (tag == "H") return Generator::H;
  if (tag == "J+") return Generator::JPlus;
  if (tag == "J-") return Generator::JMinus;
  if (tag == "K+" || tag == "E+") return Generator::KPlus;
  throw std::invalid_argument("unknown generator tag '" + tag + "'");
}

namespace {

TensorElement tensor(std::initializer_list<std::pair<Word, Word>> terms, Rational coef = Rational(1)) {
  TensorElement out;
  for (const auto& [l, r] : terms) out.push_back({coef, {l, r}});
  return out;
}

Element single(Word w, Rational coef = Rational(1)) { return {{std::move(coef), std::move(w)}}; }

}  // namespace

Presentation<Series> single_variable_presentation(const Rational& delta, int order) {
  Presentation<Series> p(Series(order), Series(order, Rational(1)));
  const Series zero(order);
  const Series one(order, Rational(1));
  const Rational half_delta = delta / 2;

  const auto cartan = [order](Spin j) { return lift(build_classical(j).h, order); };
  const auto k = [order](Rational x) {
    return [order, x](Spin j) { return matrix_exp(build_classical(j).h * x, order); };
  };
  const auto scalar = [order](Series s) {
    return [order, s](Spin j) { return Matrix<Series>::identity(j.dim(), Series(order), s); };
  };

  const int h = p.add({"H", cartan, {}, {}, zero});
  const int jp = p.add({"J+", [=](Spin j) { return build_deformed(j, delta, order).jplus; }, {}, {}, zero});
  const int jm = p.add({"J-", [=](Spin j) { return build_deformed(j, delta, order).jminus; }, {}, {}, zero});
  const int kp = p.add({"K+", k(half_delta), {}, {}, one});
  const int km = p.add({"K-", k(Rational(-half_delta)), {}, {}, one});
  const Series ep_value = ts_exp(delta, order);
  const Series em_value = ts_exp(Rational(-delta), order);
  const int ep = p.add({"E+", scalar(ep_value), {}, {}, ep_value});
  const int em = p.add({"E-", scalar(em_value), {}, {}, em_value});

  p.set_structure(h, tensor({{{h}, {}}, {{}, {h}}}), single({h}, Rational(-1)), zero);
  p.set_structure(jp, tensor({{{jp}, {kp}}, {{km}, {jp}}}), single({ep, jp}, Rational(-1)), zero);
  p.set_structure(jm, tensor({{{jm}, {kp}}, {{km}, {jm}}}), single({em, jm}, Rational(-1)), zero);
  p.set_structure(kp, tensor({{{kp}, {kp}}}), single({km}), one);
  p.set_structure(km, tensor({{{km}, {km}}}), single({kp}), one);
  p.set_structure(ep, tensor({{{ep}, {}}}), single({ep}), ep_value);
  p.set_structure(em, tensor({{{em}, {}}}), single({em}), em_value);
  return p;
}

Presentation<BiSeries> two_parameter_presentation(const Rational& delta1, const Rational& delta2, int order1,
                                                  int order2) {
  const BiSeries zero(order1, order2);
  const BiSeries one(order1, order2, Rational(1));
  Presentation<BiSeries> p(zero, one);
  const ComposedTheta theta = compose_theta(delta1, delta2, order1, order2);

  const auto exp_of = [=](const Rational& x, int which) { return bt_exp_generator(x, which, order1, order2); };
  const auto k = [=](Rational x, int which) {
    return [=](Spin j) {
      return weight_diagonal<BiSeries>(j, [&](int w) { return exp_of(Rational(x * w), which); }, zero);
    };
  };
  const auto scalar = [=](BiSeries s) {
    return [=](Spin j) { return Matrix<BiSeries>::identity(j.dim(), zero, s); };
  };

  const int h = p.add({"H", [=](Spin j) { return build_two_param(j, theta).h; }, {}, {}, zero});
  const int jp = p.add({"J+", [=](Spin j) { return build_two_param(j, theta).jplus; }, {}, {}, zero});
  const int jm = p.add({"J-", [=](Spin j) { return build_two_param(j, theta).jminus; }, {}, {}, zero});
  const int k1p = p.add({"K1+", k(Rational(delta1 / 2), 1), {}, {}, one});
  const int k1m = p.add({"K1-", k(Rational(-delta1 / 2), 1), {}, {}, one});
  const int k2p = p.add({"K2+", k(Rational(delta2 / 2), 2), {}, {}, one});
  const int k2m = p.add({"K2-", k(Rational(-delta2 / 2), 2), {}, {}, one});
  const BiSeries e1p = exp_of(delta1, 1), e1m = exp_of(Rational(-delta1), 1);
  const BiSeries e2p = exp_of(delta2, 2), e2m = exp_of(Rational(-delta2), 2);
  const int i1p = p.add({"E1+", scalar(e1p), {}, {}, e1p});
  const int i1m = p.add({"E1-", scalar(e1m), {}, {}, e1m});
  const int i2p = p.add({"E2+", scalar(e2p), {}, {}, e2p});
  const int i2m = p.add({"E2-", scalar(e2m), {}, {}, e2m});

  p.set_structure(h, tensor({{{h}, {}}, {{}, {h}}}), single({h}, Rational(-1)), zero);
  for (int j : {jp, jm})
    p.set_structure(j, tensor({{{j}, {k1p, k2p}}, {{k2m, k1m}, {j}}}), single({k1p, k2p, j, k2m, k1m}, Rational(-1)),
                    zero);
  p.set_structure(k1p, tensor({{{k1p}, {k1p}}}), single({k1m}), one);
  p.set_structure(k1m, tensor({{{k1m}, {k1m}}}), single({k1p}), one);
  p.set_structure(k2p, tensor({{{k2p}, {k2p}}}), single({k2m}), one);
  p.set_structure(k2m, tensor({{{k2m}, {k2m}}}), single({k2p}), one);
  for (auto [id, value] : {std::pair{i1p, e1p}, std::pair{i1m, e1m}, std::pair{i2p, e2p}, std::pair{i2m, e2m}})
    p.set_structure(id, tensor({{{id}, {}}}), single({id}), value);
  return p;
}

namespace {

Word word_of(Generator g, const Presentation<Series>& p) {
  switch (g) {
    case Generator::One:
      return {};
    case Generator::H:
      return {p.id("H")};
    case Generator::JPlus:
      return {p.id("J+")};
    case Generator::JMinus:
      return {p.id("J-")};
    case Generator::KPlus:
      return {p.id("K+")};
  }
  throw std::invalid_argument("unknown generator");
}

nlohmann::json with(nlohmann::json params, const nlohmann::json& extra) {
  params.update(extra);
  return params;
}

struct Relation {
  std::string id;
  std::string formula;
  Element value;  // vanishes in the algebra
};

template <class C>
struct Battery {
  const Presentation<C>& p;
  nlohmann::json base;
  Spin j1, j2, j3;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  Element conjugator;
  Element conjugator_inverse;
  bool expect_cocommutative;
  std::function<Matrix<C>()> group_like_lhs;
  std::function<Matrix<C>()> group_like_rhs;
  std::string group_like_formula;
};

template <class C>
Report run_battery(const Battery<C>& b) {
  const auto& p = b.p;
  Report report;
  const std::vector<Spin> pair{b.j1, b.j2};
  const std::vector<Spin> triple{b.j1, b.j2, b.j3};

  for (const auto& name : b.generators) {
    const auto params = with(b.base, {{"generator", name}});
    const Word g{p.id(name)};
    const TensorElement d = p.coproduct(g);

    report.add(zero_check("coassociativity", params,
                          Matrix<C>(p.flatten(p.coproduct_on_factor(d, 0), triple) -
                                    p.flatten(p.coproduct_on_factor(d, 1), triple))));

    const Matrix<C> target = p.rep(g, b.j1);
    Matrix<C> left(target.rows(), target.cols(), p.zero());
    Matrix<C> right = left;
    Element s_left, s_right;
    for (const auto& t : d) {
      left += p.rep(t.factors[1], b.j1).scaled_left(p.counit(t.factors[0])) * t.coef;
      right += p.rep(t.factors[0], b.j1).scaled_right(p.counit(t.factors[1])) * t.coef;
      s_left = s_left + t.coef * (p.antipode(t.factors[0]) * Element{{Rational(1), t.factors[1]}});
      s_right = s_right + t.coef * (Element{{Rational(1), t.factors[0]}} * p.antipode(t.factors[1]));
    }
    report.add(zero_check("counit_left", params, Matrix<C>(left - target)));
    report.add(zero_check("counit_right", params, Matrix<C>(right - target)));

    const Matrix<C> unit = p.identity(b.j1).scaled_left(p.counit(g));
    report.add(zero_check("antipode_left", params, Matrix<C>(p.rep(s_left, b.j1) - unit)));
    report.add(zero_check("antipode_right", params, Matrix<C>(p.rep(s_right, b.j1) - unit)));

    const Element gg{{Rational(1), g}};
    const Element s2 = p.antipode(p.antipode(gg));
    report.add(zero_check("antipode_square_conjugation", with(params, {{"note", "computed, not an axiom"}}),
                          Matrix<C>(p.rep(s2, b.j1) - p.rep(b.conjugator * gg * b.conjugator_inverse, b.j1))));
  }

  for (const auto& rel : b.relations) {
    const auto params = with(b.base, {{"relation", rel.id}, {"formula", rel.formula}});
    report.add(zero_check("relation_holds", params, p.rep(rel.value, b.j1)));
    report.add(zero_check("coproduct_relation", params, p.flatten(p.coproduct(rel.value), pair)));
    report.add(zero_check("counit_relation", params, p.counit(rel.value)));
    report.add(zero_check("antipode_relation", params, p.rep(p.antipode(rel.value), b.j1)));
  }

  report.add(zero_check("group_like", with(b.base, {{"formula", b.group_like_formula}}),
                        Matrix<C>(b.group_like_lhs() - b.group_like_rhs())));

  for (const char* name : {"J+", "J-"}) {
    const TensorElement d = p.coproduct(Word{p.id(name)});
    const auto witness = find_witness(Matrix<C>(p.flatten(d, pair) - p.flatten(Presentation<C>::swap_factors(d), pair)));
    const bool observed = !witness.has_value();
    Check c{"cocommutativity",
            with(b.base, {{"generator", name},
                          {"expected", b.expect_cocommutative ? "cocommutative" : "non-cocommutative"},
                          {"observed", observed ? "cocommutative" : "non-cocommutative"}}),
            observed == b.expect_cocommutative, witness};
    report.add(std::move(c));
  }
  return report;
}

}  // namespace

Matrix<Series> coproduct(Generator g, Spin j1, Spin j2, const Rational& delta, int order) {
  const auto p = single_variable_presentation(delta, order);
  return p.flatten(p.coproduct(word_of(g, p)), {j1, j2});
}

Series counit(Generator g, const Rational& delta, int order) {
  const auto p = single_variable_presentation(delta, order);
  return p.counit(word_of(g, p));
}

Matrix<Series> antipode(Generator g, Spin j, const Rational& delta, int order) {
  const auto p = single_variable_presentation(delta, order);
  return p.rep(p.antipode(word_of(g, p)), j);
}

Report check_hopf_axioms(Spin j, const Rational& delta, int order) { return check_hopf_axioms(j, j, j, delta, order); }

Report check_hopf_axioms(Spin j1, Spin j2, Spin j3, const Rational& delta, int order) {
  const auto p = single_variable_presentation(delta, order);
  const auto el = [&](std::initializer_list<std::string_view> names, Rational c = Rational(1)) {
    return p.element(names, std::move(c));
  };

  nlohmann::json base = {{"delta", to_string(delta)}, {"r", order}};
  if (j1 == j2 && j2 == j3)
    base["j"] = j1.str();
  else
    base["j"] = {j1.str(), j2.str(), j3.str()};

  const Element comm = el({"J+", "J-"}) - el({"J-", "J+"});
  std::vector<Relation> relations{
      {"weight+", "[H,J+] = 2 J+", el({"H", "J+"}) - el({"J+", "H"}) - el({"J+"}, Rational(2))},
      {"weight-", "[H,J-] = -2 J-", el({"H", "J-"}) - el({"J-", "H"}) + el({"J-"}, Rational(2))},
      {"commutator", "[J+,J-] (e(d;t) - e(-d;t)) = e(Hd;t) - e(-Hd;t)",
       comm * (el({"E+"}) - el({"E-"})) - (el({"K+", "K+"}) - el({"K-", "K-"}))},
      {"k_inverse", "K+ K- = 1", el({"K+", "K-"}) - el({})},
      {"k_commutes_h", "[H,K+] = 0", el({"H", "K+"}) - el({"K+", "H"})},
      {"k_conjugates_j+", "K+ J+ K- = e(d;t) J+", el({"K+", "J+", "K-"}) - el({"E+", "J+"})},
      {"k_conjugates_j-", "K+ J- K- = e(-d;t) J-", el({"K+", "J-", "K-"}) - el({"E-", "J-"})},
  };

  const std::vector<Spin> pair{j1, j2};
  Battery<Series> b{p,
                    base,
                    j1,
                    j2,
                    j3,
                    {"H", "J+", "J-", "K+", "K-"},
                    relations,
                    el({"K+", "K+"}),
                    el({"K-", "K-"}),
                    order == 0 || is_zero(delta) || (j1.twice() == 0 && j2.twice() == 0),
                    [&] { return p.flatten(p.coproduct(Word{p.id("K+")}), pair); },
                    [&] {
                      const Matrix<Rational> dh = theta_coefficient(p.flatten(p.coproduct(Word{p.id("H")}), pair), 0);
                      return matrix_exp(dh * Rational(delta / 2), order);
                    },
                    "D(e(Hd/2;t)) = e(D(H) d/2;t) = e(Hd/2;t) (x) e(Hd/2;t)"};
  return run_battery(b);
}

Report two_param_hopf(Spin j, const Rational& delta1, const Rational& delta2, int order1, int order2) {
  const auto p = two_parameter_presentation(delta1, delta2, order1, order2);
  const auto el = [&](std::initializer_list<std::string_view> names, Rational c = Rational(1)) {
    return p.element(names, std::move(c));
  };
  const nlohmann::json base = {{"j", j.str()}, {"delta1", to_string(delta1)}, {"delta2", to_string(delta2)},
                               {"r1", order1}, {"r2", order2}};

  const Element comm = el({"J+", "J-"}) - el({"J-", "J+"});
  std::vector<Relation> relations{
      {"weight+", "[H,J+] = 2 J+", el({"H", "J+"}) - el({"J+", "H"}) - el({"J+"}, Rational(2))},
      {"weight-", "[H,J-] = -2 J-", el({"H", "J-"}) - el({"J-", "H"}) + el({"J-"}, Rational(2))},
      {"commutator",
       "[J+,J-] (e(d1;t1)e(d2;t2) - e(-d2;t2)e(-d1;t1)) = e(Hd1;t1)e(Hd2;t2) - e(-Hd2;t2)e(-Hd1;t1)",
       comm * (el({"E1+", "E2+"}) - el({"E2-", "E1-"})) -
           (el({"K1+", "K1+", "K2+", "K2+"}) - el({"K2-", "K2-", "K1-", "K1-"}))},
      {"k1_inverse", "K1+ K1- = 1", el({"K1+", "K1-"}) - el({})},
      {"k2_inverse", "K2+ K2- = 1", el({"K2+", "K2-"}) - el({})},
  };

  const BiSeries zero(order1, order2);
  const std::vector<Spin> pair{j, j};
  const bool trivial1 = order1 == 0 || is_zero(delta1);
  const bool trivial2 = order2 == 0 || is_zero(delta2);
  Battery<BiSeries> b{p,
                      base,
                      j,
                      j,
                      j,
                      {"H", "J+", "J-", "K1+", "K1-", "K2+", "K2-"},
                      relations,
                      el({"K1+", "K2+", "K1+", "K2+"}),
                      el({"K2-", "K1-", "K2-", "K1-"}),
                      (trivial1 && trivial2) || j.twice() == 0,
                      [&] { return p.flatten(p.coproduct(el({"K1+", "K2+"})), pair); },
                      [&] {
                        std::vector<BiSeries> diag;
                        for (int w1 : j.weights())
                          for (int w2 : j.weights()) {
                            const Rational w(w1 + w2);
                            diag.push_back(bt_exp_generator(Rational(w * delta1 / 2), 1, order1, order2) *
                                           bt_exp_generator(Rational(w * delta2 / 2), 2, order1, order2));
                          }
                        return Matrix<BiSeries>::diagonal(diag, zero);
                      },
                      "D(K1+ K2+) = e(D(H) d1/2;t1) e(D(H) d2/2;t2)"};
  return run_battery(b);
}

}  // namespace parasl2
