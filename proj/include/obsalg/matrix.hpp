#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "obsalg/scalar.hpp"

namespace obsalg {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; throws DimensionMismatch on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  /// Matrix whose k-th column is cols[k].
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix adjoint() const;  ///< conjugate transpose
  Matrix conjugate() const;
  bool is_zero() const;
  bool is_real() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Eigen::MatrixXcd to_eigen() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}, one vector per free column of the RREF (the free
/// coordinate set to 1). Empty when the kernel is trivial.
std::vector<Vector> nullspace(const Matrix& m);

/// Float-mode kernel via SVD: singular values below eps * sigma_max count as zero.
std::vector<Eigen::VectorXcd> nullspace(const Eigen::MatrixXcd& m, double eps = 1e-9);

/// Throws Singular.
Matrix inverse(const Matrix& m);

/// Some x with Mx = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Indices of a maximal linearly independent subset, scanning in order.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors);

}  // namespace obsalg
