#include "support.hpp"

#include "parasl2/cbh.hpp"
#include "parasl2/errors.hpp"
#include "parasl2/psi.hpp"
#include "parasl2/sl2_rep.hpp"

using namespace parasl2;
using test::q;
using test::spin;

TEST_CASE("classical spin-1/2 and spin-1 matrices") {
  const auto s = build_classical(spin(1));
  CHECK(s.h == Matrix<Rational>::diagonal({q(1), q(-1)}, q(0)));
  CHECK(s.jplus(0, 1) == q(1));
  CHECK(s.jminus(1, 0) == q(1));
  CHECK(commutator(s.jplus, s.jminus) == s.h);

  const auto v = build_classical(spin(2));
  CHECK(v.jplus(0, 1) == q(1));
  CHECK(v.jplus(1, 2) == q(2));
  CHECK(v.jminus(1, 0) == q(2));
  CHECK(v.jminus(2, 1) == q(1));
  CHECK(commutator(v.jplus, v.jminus) == v.h);
}

TEST_CASE("defining relations on the default grid") {
  for (int twice : {1, 2, 3})
    for (int order = 0; order <= 3; ++order)
      for (const Rational& d : {q(1, 2), q(1, 3)}) {
        CAPTURE(twice);
        CAPTURE(order);
        REQUIRE_ALL_PASS(check_defining_relations(spin(twice), d, order));
      }
}

TEST_CASE("graded sums up to order 5") {
  for (int twice : {1, 2, 3, 4})
    for (int order = 0; order <= 5; ++order) {
      const Report r = check_defining_relations(spin(twice), q(2, 5), order);
      REQUIRE_ALL_PASS(r);
      CHECK(r.find("graded_even_sum", {{"k", order / 2}}) != nullptr);
    }
}

TEST_CASE("order 0 is classical sl(2)") {
  const auto r = check_defining_relations(spin(2), q(1, 2), 0);
  const Check* c = r.find("classical_limit");
  REQUIRE(c != nullptr);
  CHECK(c->passed);
  const auto rep = build_deformed(spin(2), q(1, 2), 0);
  CHECK(theta_coefficient(rep.jplus, 0) == build_classical(spin(2)).jplus);
}

TEST_CASE("order 2: theta^2 coefficient of the commutator") {
  const Rational d = q(1, 3);
  const auto rep = build_deformed(spin(3), d, 2);
  const auto c2 = theta_coefficient(commutator(rep.jplus, rep.jminus), 2);
  // on weight 3: d^2 (27 - 3)/6 = 4 d^2
  CHECK(c2(0, 0) == Rational(4 * d * d));
  CHECK(c2(1, 1) == q(0));
  const auto r = check_defining_relations(spin(3), d, 2);
  REQUIRE(r.find("higgs_theta2_coefficient") != nullptr);
  CHECK(r.find("higgs_theta2_coefficient")->passed);
}

TEST_CASE("taylor components") {
  const Rational d = q(1, 2);
  const auto rep = build_deformed(spin(3), d, 3);
  std::vector<Matrix<Rational>> parts;
  for (int k = 0; k <= 3; ++k) parts.push_back(taylor_component(rep.jplus, k, d));
  CHECK(parts[0] == build_classical(spin(3)).jplus);
  CHECK(parts[1] == Matrix<Rational>(4, 4, q(0)));
  CHECK(reassemble(parts, d) == rep.jplus);
  // components do not depend on delta
  CHECK(taylor_component(build_deformed(spin(3), q(1, 3), 3).jplus, 2, q(1, 3)) == parts[2]);
  CHECK_THROWS_AS(taylor_component(rep.jplus, 4, d), std::out_of_range);
  CHECK_THROWS_AS(taylor_component(rep.jplus, -1, d), std::out_of_range);
  CHECK_THROWS_AS(taylor_component(rep.jplus, 1, q(0)), domain_error);
  CHECK_THROWS_AS(build_deformed(spin(1), d, -1), structural_error);
}

TEST_CASE("delta = 0 collapses to the classical matrices") {
  const auto rep = build_deformed(spin(2), q(0), 3);
  CHECK(rep.jplus == lift(build_classical(spin(2)).jplus, 3));
  REQUIRE_ALL_PASS(check_defining_relations(spin(2), q(0), 3));
}

TEST_CASE("two-variable generators") {
  SUBCASE("orders (0,0) and (1,0) satisfy the product-form commutator") {
    for (auto [r1, r2] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 0}})
      for (int twice : {1, 2}) REQUIRE_ALL_PASS(check_two_param_relations(spin(twice), q(1, 2), q(1, 3), r1, r2));
  }
  SUBCASE("orders (1,1) break the product-form commutator at bidegree (1,1)") {
    const Report r = check_two_param_relations(spin(1), q(1, 2), q(1, 3), 1, 1);
    const Check* weight = r.find("weight_grading", {{"generator", "J+"}});
    REQUIRE(weight != nullptr);
    CHECK(weight->passed);
    const Check* comm = r.find("two_param_commutator_product_form");
    REQUIRE(comm != nullptr);
    CHECK_FALSE(comm->passed);
    REQUIRE(comm->witness.has_value());
    CHECK(comm->witness->position["theta1_degree"] == 1);
    CHECK(comm->witness->position["theta2_degree"] == 1);
  }
  SUBCASE("single-variable reduction") {
    const auto two = build_two_param(spin(2), compose_theta(q(1, 2), q(1, 3), 2, 0));
    const auto one = build_deformed(spin(2), q(1, 2), 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        for (int a = 0; a <= 2; ++a) CHECK(two.jplus(i, k).at(a, 0) == one.jplus(i, k)[static_cast<std::size_t>(a)]);
  }
}
