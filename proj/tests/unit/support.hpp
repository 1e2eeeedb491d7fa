#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "parasl2/rational.hpp"
#include "parasl2/report.hpp"
#include "parasl2/spin.hpp"
#include "parasl2/theta_series.hpp"

namespace test {

using parasl2::Rational;

inline Rational q(long p, long d = 1) { return parasl2::make_rational(p, d); }
inline parasl2::Spin spin(int twice) { return parasl2::Spin::from_twice(twice); }

/// Small random rationals with numerator in [-9, 9] and denominator in [1, 7].
class RandomRational {
 public:
  explicit RandomRational(unsigned seed) : gen_(seed) {}
  Rational operator()() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    const long n = num(gen_), d = den(gen_);
    return parasl2::make_rational(n, d);
  }
  Rational nonzero() {
    for (;;) {
      Rational x = (*this)();
      if (!parasl2::is_zero(x)) return x;
    }
  }
  parasl2::Series series(int order) {
    parasl2::Series s(order);
    for (int k = 0; k <= order; ++k) s[static_cast<std::size_t>(k)] = (*this)();
    return s;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937 gen_;
};

/// Lists the failing checks of a report, for diagnostics.
inline std::string failures(const parasl2::Report& r) {
  std::string out;
  for (const auto& c : r.checks())
    if (!c.passed) out += c.name + " " + c.params.dump() + "\n";
  return out;
}

}  // namespace test

#define REQUIRE_ALL_PASS(report)                      \
  do {                                                \
    const auto& rep_ = (report);                      \
    INFO(test::failures(rep_));                       \
    REQUIRE(rep_.all_passed());                       \
    REQUIRE_FALSE(rep_.checks().empty());             \
  } while (0)
