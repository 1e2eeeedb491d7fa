#include "support.hpp"

#include "parasl2/rmatrix.hpp"

using namespace parasl2;
using test::q;
using test::spin;

TEST_CASE("spin-1/2 R-matrix entries") {
  const Rational d = q(1, 2);
  const auto r = build_R(spin(1), spin(1), d);
  // basis ++, +-, -+, --
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      Series expected(1, i == k ? q(1) : q(0));
      if (i == 2 && k == 1) expected[1] = d;
      if (i == 1 && k == 2) expected[1] = -d;
      CAPTURE(i);
      CAPTURE(k);
      CHECK(r(i, k) == expected);
    }
  CHECK(format_entry(r(2, 1), d) == "0 + 1·δθ");
  CHECK(format_entry(r(1, 2), d) == "0 + -1·δθ");
  CHECK(format_entry(r(0, 0), d) == "1 + 0·δθ");
}

TEST_CASE("delta = 0 gives the identity") {
  for (int twice : {1, 2})
    CHECK(build_R(spin(twice), spin(twice), q(0)) ==
          Matrix<Series>::identity(spin(twice).dim() * spin(twice).dim(), Series(1), Series(1, q(1))));
}

TEST_CASE("twist invariants") {
  const Rational d = q(1, 3);
  const auto u = build_U(spin(1), spin(2), d);
  CHECK(theta_coefficient(u, 0) == Matrix<Rational>::identity(6, q(0), q(1)));

  const auto p = twist_presentation(d);
  const TensorElement x = twist_element(p, 1);
  // plus is an involution
  CHECK(p.flatten(plus(p, plus(p, x)), {spin(1), spin(2)}) == u);
  // the linear part changes sign under the factor swap alone and under
  // J+ <-> J- alone, so the combined operation leaves it fixed
  const auto lin21 = theta_coefficient(build_U(spin(2), spin(1), d), 1);
  const auto lin = theta_coefficient(u, 1);
  CHECK(theta_coefficient(p.flatten(Presentation<Series>::swap_factors(x), {spin(2), spin(1)}), 1) ==
        Matrix<Rational>(lin21 * q(-1)));
  CHECK(theta_coefficient(p.flatten(plus(p, x), {spin(1), spin(2)}), 1) == Matrix<Rational>(lin * q(-1)));
  CHECK(theta_coefficient(p.flatten(Presentation<Series>::swap_factors(plus(p, x)), {spin(2), spin(1)}), 1) == lin21);
  CHECK_FALSE(lin == Matrix<Rational>(6, 6, q(0)));
}

TEST_CASE("R = U plus(U_{-theta}) and U U_{-theta} = 1") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 1}})
    for (const Rational& d : {q(1, 2), q(1, 3)}) REQUIRE_ALL_PASS(check_r_matrix(spin(a), spin(b), d));
}

TEST_CASE("intertwiner") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}})
    for (const Rational& d : {q(1, 2), q(1, 3)}) {
      const Report r = check_intertwiner(spin(a), spin(b), d);
      REQUIRE_ALL_PASS(r);
      CHECK(r.checks().size() == 3);
    }
}

TEST_CASE("Yang-Baxter equation") {
  REQUIRE_ALL_PASS(check_ybe(spin(1), q(1, 2)));
  REQUIRE_ALL_PASS(check_ybe(spin(2), q(1, 3)));
  REQUIRE_ALL_PASS(check_ybe(spin(1), q(0)));
}
