#pragma once

// Dense matrices over Scalar or Rational.

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }
inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (r != c && !is_zero_value((*this)(r, c))) return false;
      }
    }
    return true;
  }

  Matrix& operator+=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  Matrix scaled(const T& factor) const {
    Matrix out = *this;
    for (T& x : out.data_) {
      if (!is_zero_value(x)) x *= factor;
    }
    return out;
  }

  // Skips zero entries of the left factor; seminormal matrices are sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (is_zero_value(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const T& y = b(k, c);
          if (!is_zero_value(y)) out(r, c) += x * y;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix specialize(const ScalarMatrix& m, const ParamSpec& p);

// Exact rank by fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

}  // namespace hecke
