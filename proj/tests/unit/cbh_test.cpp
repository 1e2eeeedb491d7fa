#include "support.hpp"

#include "parasl2/cbh.hpp"
#include "parasl2/errors.hpp"

using namespace parasl2;
using test::q;

namespace {

BiSeries mono(int r1, int r2, int a, int b, const Rational& c) { return BiSeries::monomial(r1, r2, a, b, c); }

}  // namespace

TEST_CASE("adjoint powers") {
  const Rational d1 = q(1, 2), d2 = q(1, 3);
  const BiSeries a = mono(4, 1, 1, 0, d1), b = mono(4, 1, 0, 1, d2);
  CHECK(adjoint_power(a, b, 1) == mono(4, 1, 1, 1, Rational(2 * d1 * d2)));
  CHECK(adjoint_power(a, b, 2) == mono(4, 1, 2, 1, Rational(4 * d1 * d1 * d2)));
  CHECK(adjoint_power(a, a, 1).is_zero());
  CHECK_THROWS_AS(adjoint_power(a, b, 0), domain_error);
}

TEST_CASE("adjoint chain closed form up to m = 4") {
  for (const Rational& d1 : {q(1, 2), q(-2, 3)})
    for (const Rational& d2 : {q(1, 3), q(5)}) {
      const BiSeries a = mono(4, 1, 1, 0, d1), b = mono(4, 1, 0, 1, d2);
      for (int m = 1; m <= 4; ++m) {
        const Rational c = pow(q(2), m) * pow(d1, m) * d2;
        CHECK(adjoint_power(a, b, m) == mono(4, 1, m, 1, c));
        // the composed element carries half of it divided by (m+1)!
        const ComposedTheta t = compose_theta(d1, d2, 4, 1);
        const Rational expected = m == 1 ? Rational(c / 2 / factorial(2) + c / 2 / factorial(2))
                                         : Rational(c / 2 / factorial(static_cast<unsigned>(m + 1)));
        CHECK(t.value.at(m, 1) == expected);
      }
    }
}

TEST_CASE("composed theta examples") {
  const Rational d1 = q(1, 2), d2 = q(1, 3);
  CHECK(compose_theta(d1, d2, 0, 0).value == BiSeries(mono(0, 0, 0, 0, q(0))));
  CHECK(compose_theta(d1, d2, 1, 1).value ==
        mono(1, 1, 1, 0, d1) + mono(1, 1, 0, 1, d2) + mono(1, 1, 1, 1, Rational(d1 * d2)));
  CHECK(compose_theta(d1, q(0), 2, 2).value == mono(2, 2, 1, 0, d1));
  const ComposedTheta t = compose_theta(d1, d2, 2, 3);
  CHECK(t.delta1 == d1);
  CHECK(t.order2 == 3);
  CHECK(is_zero(t.value.at(0, 0)));
  CHECK(t.value.at(1, 0) == d1);
  CHECK(t.value.at(0, 1) == d2);
}

TEST_CASE("exponential identity when one order is at most 1") {
  for (int r1 = 0; r1 <= 4; ++r1)
    for (int r2 = 0; r2 <= 4; ++r2) {
      if (std::min(r1, r2) > 1) continue;
      CAPTURE(r1);
      CAPTURE(r2);
      for (const Rational& d1 : {q(1, 2), q(-3)})
        for (const Rational& d2 : {q(1, 3), q(2, 7)}) {
          const Report r = check_exp_identity(d1, d2, r1, r2);
          // with one order 0 that variable vanishes outright
          if (std::min(r1, r2) == 0 || std::max(r1, r2) <= 2) {
            REQUIRE_ALL_PASS(r);
          } else {
            const Check* c = r.find("cbh_exp_identity");
            REQUIRE(c != nullptr);
            CHECK_FALSE(c->passed);
          }
        }
    }
}

TEST_CASE("exponential identity at (2,2) holds") {
  REQUIRE_ALL_PASS(check_exp_identity(q(1, 2), q(1, 3), 2, 2));
  REQUIRE_ALL_PASS(check_exp_identity(q(-3), q(2, 7), 2, 2));
}

TEST_CASE("the truncated formula misses bidegree (3,1)") {
  // The exact logarithm has no t1^3 t2 term; the formula gives 2^3/(2*4!) d1^3 d2.
  const Rational d1 = q(1, 2), d2 = q(1, 3);
  const Report r = check_exp_identity(d1, d2, 3, 1);
  const Check* c = r.find("cbh_exp_identity");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  REQUIRE(c->witness.has_value());
  CHECK(c->witness->position["theta1_degree"] == 3);
  CHECK(c->witness->position["theta2_degree"] == 1);
  const auto& mismatches = c->params["mismatches"];
  REQUIRE(mismatches.size() == 1);
  CHECK(mismatches[0]["bidegree"] == nlohmann::json::array({3, 1}));
  CHECK(mismatches[0]["product_of_exponentials"] == "1/144");
  CHECK(mismatches[0]["exponential_of_composed"] == "1/72");
  CHECK(compose_theta(d1, d2, 3, 1).value.at(3, 1) == Rational(pow(d1, 3) * d2 / 6));

  const Report mirror = check_exp_identity(d1, d2, 1, 3);
  const Check* mirrored = mirror.find("cbh_exp_identity");
  REQUIRE(mirrored != nullptr);
  CHECK(mirrored->witness->position["theta1_degree"] == 1);
  CHECK(mirrored->witness->position["theta2_degree"] == 3);
}

TEST_CASE("reversed composition") {
  const Rational d1 = q(1, 2), d2 = q(1, 3);
  const BiSeries forward = compose_theta(d1, d2, 2, 2).value;
  const BiSeries reversed = compose_theta_reversed(d1, d2, 2, 2);
  // degree-one parts agree, the t1 t2 part flips sign
  CHECK(forward.at(1, 0) == reversed.at(1, 0));
  CHECK(forward.at(0, 1) == reversed.at(0, 1));
  CHECK(forward.at(1, 1) == -reversed.at(1, 1));
  CHECK(bt_exp(reversed) == bt_exp(mono(2, 2, 0, 1, d2)) * bt_exp(mono(2, 2, 1, 0, d1)));
}
