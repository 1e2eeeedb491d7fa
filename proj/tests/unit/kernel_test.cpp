#include "support.hpp"

#include "parasl2/bi_theta.hpp"
#include "parasl2/errors.hpp"
#include "parasl2/matrix.hpp"
#include "parasl2/polynomial.hpp"

using namespace parasl2;
using test::q;

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3/4") == q(3, 4));
  CHECK(parse_rational("-2") == q(-2));
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK(to_string(q(6, 8)) == "3/4");
  CHECK(to_string(q(-5)) == "-5");
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1/2/3"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(inverse(q(0)), not_a_unit);
  CHECK(pow(q(2, 3), -2) == q(9, 4));
  CHECK(factorial(5) == q(120));
  CHECK(make_rational(6, -8) == parse_rational("-3/4"));
  CHECK_THROWS_AS(make_rational(1, 0), not_a_unit);
}

TEST_CASE("spin labels") {
  const Spin s = Spin::parse("3/2");
  CHECK(s.twice() == 3);
  CHECK(s.dim() == 4);
  CHECK(s.weights() == std::vector<int>{3, 1, -1, -3});
  CHECK(s.str() == "3/2");
  CHECK(Spin::parse("1").weights() == std::vector<int>{2, 0, -2});
  CHECK(Spin::parse("0").dim() == 1);
  CHECK_THROWS(Spin::parse("1/3"));
  CHECK_THROWS(Spin::parse("-1"));
  CHECK_THROWS(Spin::parse("x"));
}

TEST_CASE("polynomials in H") {
  const HPoly h = HPoly::variable();
  const HPoly p = h * h * h - h;
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(q(2)) == q(6));
  CHECK(p.compose(h + HPoly(1)).evaluate(q(1)) == q(6));
  CHECK(to_string(p / q(6)) == "(H^3 - H)/6");
  CHECK((p - p).is_zero());
  CHECK(inverse(HPoly(q(2))) == HPoly(q(1, 2)));
  CHECK_THROWS_AS(inverse(h), not_a_unit);
}

TEST_CASE("theta series: nilpotency and order checks") {
  const Series t = Series::theta(3);
  CHECK_FALSE((t * t * t).is_zero());
  CHECK((t * t * t * t).is_zero());
  CHECK_THROWS_AS(Series(2) + Series(3), structural_error);
  CHECK_THROWS_AS(Series(-1), structural_error);
  CHECK_THROWS_AS(ts_invert(Series::theta(2)), not_a_unit);
}

TEST_CASE("theta series match their shift-matrix representation") {
  test::RandomRational rnd(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = rnd.integer(0, 6);
    const Series a = rnd.series(order), b = rnd.series(order);
    REQUIRE(ts_to_matrix(Series(a * b)) == ts_to_matrix(a) * ts_to_matrix(b));
    REQUIRE(ts_to_matrix(Series(a + b)) == ts_to_matrix(a) + ts_to_matrix(b));
  }
  const auto s = theta_shift_matrix(3);
  CHECK(ts_to_matrix(Series::theta(3)) == s);
}

TEST_CASE("truncated exponential, trig and inverse") {
  test::RandomRational rnd(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = rnd.integer(0, 7);
    const Rational x = rnd(), y = rnd();
    REQUIRE(ts_exp(x, order) * ts_exp(y, order) == ts_exp(Rational(x + y), order));
    const Series c = ts_cos(x, order), sn = ts_sin(x, order);
    REQUIRE(c * c + sn * sn == Series(order, q(1)));

    Series u = rnd.series(order);
    u[0] = rnd.nonzero();
    REQUIRE(u * ts_invert(u) == Series(order, q(1)));
    REQUIRE(ts_invert(u) * u == Series(order, q(1)));
  }
  CHECK(ts_exp(q(2), 3) == Series({q(1), q(2), q(2), q(4, 3)}));
}

TEST_CASE("matrix exponential of a diagonal matrix") {
  const auto h = Matrix<Rational>::diagonal({q(1), q(-1)}, q(0));
  const auto e = matrix_exp(h, 2);
  CHECK(e(0, 0) == ts_exp(q(1), 2));
  CHECK(e(1, 1) == ts_exp(q(-1), 2));
  CHECK(e(0, 1).is_zero());
}

TEST_CASE("kronecker product and commutator") {
  const auto a = Matrix<Rational>(2, 2, std::vector<Rational>{q(1), q(2), q(3), q(4)});
  const auto one = Matrix<Rational>::identity(2, q(0), q(1));
  const auto k = kron(a, one);
  CHECK(k.rows() == 4);
  CHECK(k(2, 0) == q(3));
  CHECK(k(2, 1) == q(0));
  CHECK(kron(one, a)(1, 0) == q(3));
  CHECK(commutator(a, one) == Matrix<Rational>(2, 2, q(0)));
  CHECK_THROWS_AS(a + k, structural_error);
}

TEST_CASE("bi-theta sign rule") {
  for (int r1 = 0; r1 <= 3; ++r1)
    for (int r2 = 0; r2 <= 3; ++r2) {
      const auto mono = [&](int a, int b) { return BiSeries::monomial(r1, r2, a, b); };
      for (int a = 0; a <= r1; ++a)
        for (int b = 0; b <= r2; ++b)
          for (int c = 0; c <= r1; ++c)
            for (int d = 0; d <= r2; ++d) {
              const Rational sign = (b * c) % 2 == 0 ? q(1) : q(-1);
              const BiSeries expected = a + c <= r1 && b + d <= r2 ? BiSeries(mono(a + c, b + d) * sign)
                                                                  : BiSeries(r1, r2);
              REQUIRE(mono(a, b) * mono(c, d) == expected);
            }
    }
}

TEST_CASE("bi-theta associativity by monomial enumeration") {
  for (int r1 = 0; r1 <= 3; ++r1)
    for (int r2 = 0; r2 <= 3; ++r2) {
      std::vector<BiSeries> basis;
      for (int a = 0; a <= r1; ++a)
        for (int b = 0; b <= r2; ++b) basis.push_back(BiSeries::monomial(r1, r2, a, b));
      for (const auto& x : basis)
        for (const auto& y : basis)
          for (const auto& z : basis) REQUIRE((x * y) * z == x * (y * z));
    }
}

TEST_CASE("bi-theta exponential") {
  const BiSeries t1 = BiSeries::theta1(2, 2), t2 = BiSeries::theta2(2, 2);
  CHECK(t1 * t2 == -(t2 * t1));
  CHECK(bt_exp(BiSeries(t1 * q(3))) == bt_exp_generator(q(3), 1, 2, 2));
  CHECK_THROWS_AS(bt_exp(BiSeries(2, 2, q(1))), domain_error);
  CHECK_THROWS_AS(BiSeries(1, 1) + BiSeries(1, 2), structural_error);
}
