#include "parasl2/theta_series.hpp"

namespace parasl2 {

Matrix<Series> matrix_exp(const Matrix<Rational>& x, int order) {
  const std::size_t n = x.rows();
  auto power = Matrix<Rational>::identity(n, Rational(0), Rational(1));
  Matrix<Series> out(n, n, Series(order));
  for (int k = 0; k <= order; ++k) {
    if (k > 0) power = power * x;
    const Rational w = inverse(factorial(static_cast<unsigned>(k)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j)[static_cast<std::size_t>(k)] = power(i, j) * w;
  }
  return out;
}

}  // namespace parasl2
