#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dsmooth/scalar.hpp"

namespace dsmooth {

/// Dense exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Scalar(0)) {}
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::vector<Scalar> column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form; pivot columns are returned through `pivots`.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);
/// Some solution of m v = rhs, if any.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);
/// Gaussian-elimination determinant.
Scalar determinant(const Matrix& m);
/// Laplace expansion along the first row; intended for small fixed sizes.
Scalar determinant_cofactor(const Matrix& m);
std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

}  // namespace dsmooth
