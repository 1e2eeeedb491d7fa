#include "parasl2/spin.hpp"

#include <stdexcept>

#include "parasl2/rational.hpp"

namespace parasl2 {

Spin Spin::from_twice(int twice_j) {
  if (twice_j < 0) throw std::invalid_argument("spin must be >= 0");
  return Spin(twice_j);
}

Spin Spin::parse(std::string_view text) {
  const Rational j = parse_rational(text);
  const Rational twice = j * 2;
  if (twice.get_den() != 1 || sgn(twice) < 0)
    throw std::invalid_argument("spin must be a nonnegative half-integer, got '" + std::string(text) + "'");
  if (!twice.get_num().fits_sint_p()) throw std::invalid_argument("spin too large");
  return from_twice(static_cast<int>(twice.get_num().get_si()));
}

std::vector<int> Spin::weights() const {
  std::vector<int> w;
  for (int i = 0; i <= twice_; ++i) w.push_back(twice_ - 2 * i);
  return w;
}

std::string Spin::str() const { return twice_ % 2 == 0 ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2"; }

}  // namespace parasl2
