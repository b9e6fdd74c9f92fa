#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewcoh/matrix.hpp"

namespace skewcoh {

struct RrefResult {
  Matrix matrix;
  /// Strictly increasing pivot columns, one per nonzero row.
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form.
RrefResult rref(const Matrix& m);

/// A subspace of F^m held as the unique RREF basis of its row space, so two
/// equal subspaces always compare bit-identical.
class Subspace {
 public:
  /// The zero subspace of F^ambient_dim.
  Subspace(FieldSpec field, std::size_t ambient_dim);

  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  /// Row span of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors);

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; dimension is cols(m) - rank(m).
Subspace kernel_basis(const Matrix& m);
/// Column space of m.
Subspace image_basis(const Matrix& m);
/// ker(m - c * 1).
Subspace eigenspace(const Matrix& m, const Scalar& c);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Pivot completion: standard basis vectors at the non-pivot coordinates of
/// u's RREF basis. Always a direct complement of u.
Subspace complement(const Subspace& u);

/// Linear functionals giving coordinates in the basis formed by the rows of
/// `basis` (which must be square and invertible): row i of the result applied
/// to v is the i-th coefficient of v.
Matrix coordinate_functionals(const Matrix& basis);

/// Coordinate map V -> V/u, taken with respect to complement(u): a
/// (dim V - dim u) x dim V matrix whose kernel is exactly u.
Matrix quotient_basis(const Subspace& u);

/// Some x with a x = b, or nothing if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace skewcoh
