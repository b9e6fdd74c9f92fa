#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "skewcoh/field.hpp"

namespace skewcoh {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t index);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

/// Dense row-major matrix over a single field. Matrices act on column
/// vectors, so column j of a group matrix is the image of e_j.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_ints(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows);
  /// Stacks the given vectors as rows; `cols` fixes the width when `rows` is empty.
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  Matrix pow(std::size_t exponent) const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Rows of `top` followed by rows of `bottom`.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Kronecker product; index (i, k) of the result is i * dim(b) + k.
Matrix kronecker(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis pairs (a, b), a < b, of the exterior square, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> wedge2_pairs(std::size_t n);
std::size_t wedge2_index(std::size_t n, std::size_t a, std::size_t b);
/// Induced action on the exterior square in the basis e_a ^ e_b (a < b),
/// entries are 2x2 minors.
Matrix wedge2(const Matrix& m);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace skewcoh
