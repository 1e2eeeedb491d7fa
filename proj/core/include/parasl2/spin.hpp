#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace parasl2 {

/// Half-integer spin j >= 0, stored as the integer 2j.
class Spin {
 public:
  static Spin from_twice(int twice_j);

  /// Accepts "0", "1", "3/2", ...; the denominator must be 1 or 2.
  static Spin parse(std::string_view text);

  int twice() const { return twice_; }
  std::size_t dim() const { return static_cast<std::size_t>(twice_) + 1; }

  /// H-eigenvalues 2m for m = j, j-1, ..., -j (basis order).
  std::vector<int> weights() const;

  std::string str() const;

  friend bool operator==(Spin a, Spin b) { return a.twice_ == b.twice_; }
  friend bool operator<(Spin a, Spin b) { return a.twice_ < b.twice_; }

 private:
  explicit Spin(int twice_j) : twice_(twice_j) {}
  int twice_;
};

}  // namespace parasl2
