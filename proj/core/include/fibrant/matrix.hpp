#pragma once

#include "fibrant/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fibrant {

struct dimension_mismatch : std::logic_error {
  explicit dimension_mismatch(const std::string& what) : std::logic_error(what) {}
};

/// Dense row-major matrix over an exact field. Matrices with zero rows or
/// zero columns are legal values and stand for zero objects and zero maps.
class Matrix {
 public:
  Matrix() : Matrix(0, 0, Field::rationals()) {}
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix identity(std::size_t n, Field f);
  static Matrix zero(std::size_t rows, std::size_t cols, Field f) { return Matrix(rows, cols, f); }
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  Matrix column(std::size_t c) const;
  /// [a | b] side by side
  static Matrix hconcat(const Matrix& a, const Matrix& b);
  /// a on top of b
  static Matrix vconcat(const Matrix& a, const Matrix& b);
  Matrix submatrix_cols(std::size_t first, std::size_t count) const;

  /// Flatten to a single column (row-major), the coordinate vector used
  /// when treating Hom spaces as column spaces.
  Matrix vectorize() const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> entries_;
};

/// Exact rank via Gaussian elimination with exact zero tests.
std::size_t rank(const Matrix& m);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
/// Solution choice is the first basic solution of the echelon form.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Columns form a basis of the null space; count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Indices of a maximal linearly independent subset of the columns
/// (the pivot columns of the reduced echelon form).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// True iff v (a single column) lies in the column space of m.
bool column_space_membership(const Matrix& m, const Matrix& v);

std::optional<Matrix> inverse(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace fibrant
