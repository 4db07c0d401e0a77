#pragma once

// Small dense matrices over the exact scalar field.

#include <cstddef>
#include <vector>

#include "pwmra/exactnum.hpp"

namespace pwmra {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix transpose() const;
  /// [this | o]
  Matrix hconcat(const Matrix& o) const;
  std::vector<std::vector<double>> to_double() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& x);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
Matrix rref(Matrix a, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : a x = 0}. One vector per free column, taken in ascending
/// column order, with that free variable set to 1 and the others to 0.
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);

}  // namespace pwmra
