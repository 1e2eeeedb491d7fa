#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parasl2/errors.hpp"
#include "parasl2/rational.hpp"

namespace parasl2 {

/// Dense row-major matrix over a (possibly noncommutative) ring T.
/// Products keep the left-to-right order of factors, so T may be a
/// noncommutative ring such as BiTheta.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix diagonal(const std::vector<T>& diag, const T& zero) {
    Matrix m(diag.size(), diag.size(), zero);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  auto map(F&& f) const -> Matrix<std::invoke_result_t<F, const T&>> {
    using U = std::invoke_result_t<F, const T&>;
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] + o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] - o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    return a.map([](const T& x) { return T(-x); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.cols_ == 0)
      throw structural_error("matrix product: inner dimensions " + std::to_string(a.cols_) + " and " +
                             std::to_string(b.rows_));
    std::vector<T> out;
    out.reserve(a.rows_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out.push_back(std::move(acc));
      }
    return Matrix(a.rows_, b.cols_, std::move(out));
  }

  /// Entrywise scaling by an exact rational.
  friend Matrix operator*(const Matrix& a, const Rational& s) {
    return a.map([&](const T& x) { return T(x * s); });
  }
  friend Matrix operator*(const Rational& s, const Matrix& a) { return a * s; }

  /// Left and right multiplication by a ring scalar (order preserved).
  Matrix scaled_left(const T& s) const {
    return map([&](const T& x) { return T(s * x); });
  }
  Matrix scaled_right(const T& s) const {
    return map([&](const T& x) { return T(x * s); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const std::vector<T>& data() const { return data_; }

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw structural_error("matrix data size mismatch");
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw structural_error("matrix shapes differ: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Kronecker product. Entry ((i1,i2),(j1,j2)) is a(i1,j1) * b(i2,j2), the
/// left factor's coefficient multiplied first.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  std::vector<T> out;
  out.reserve(a.rows() * b.rows() * a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) out.push_back(a(i1, j1) * b(i2, j2));
  return Matrix<T>(a.rows() * b.rows(), a.cols() * b.cols(), std::move(out));
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Position of the first entry (row-major) for which `nonzero` holds.
template <class T, class Pred>
std::optional<std::pair<std::size_t, std::size_t>> first_entry_where(const Matrix<T>& m, Pred&& nonzero) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (nonzero(m(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace parasl2
