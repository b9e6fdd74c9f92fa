#include "skewcoh/linalg.hpp"

namespace skewcoh {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  return span(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(const Matrix& rows) {
  RrefResult reduced = rref(rows);
  const std::size_t r = reduced.pivots.size();
  return Subspace(reduced.matrix.row_block(0, r), std::move(reduced.pivots));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return span(Matrix::from_rows(field, ambient_dim, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "membership test");
  Vector residual = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar coeff = residual[pivots_[i]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= coeff * basis_(i, c);
  }
  return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace containment");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  const RrefResult reduced = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) v[reduced.pivots[i]] = -reduced.matrix(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), vectors);
}

Subspace image_basis(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace eigenspace(const Matrix& m, const Scalar& c) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigenspace of a non-square matrix");
  return kernel_basis(m - c * Matrix::identity(m.field(), m.rows()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace sum");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace intersection");
  // a ∩ b is the common annihilator of ann(a) + ann(b).
  const Subspace ann_a = kernel_basis(a.basis());
  const Subspace ann_b = kernel_basis(b.basis());
  return kernel_basis(vstack(ann_a.basis(), ann_b.basis()));
}

Subspace complement(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient_dim(), false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t c = 0; c < u.ambient_dim(); ++c) {
    if (!is_pivot[c]) vectors.push_back(unit_vector(u.field(), u.ambient_dim(), c));
  }
  return Subspace::span(u.field(), u.ambient_dim(), vectors);
}

Matrix coordinate_functionals(const Matrix& basis) { return inverse(basis).transpose(); }

Matrix quotient_basis(const Subspace& u) {
  const Subspace comp = complement(u);
  if (comp.dim() == 0) return Matrix(u.field(), 0, u.ambient_dim());
  const Matrix functionals = coordinate_functionals(vstack(comp.basis(), u.basis()));
  return functionals.row_block(0, comp.dim());
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix augmented(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const RrefResult reduced = rref(augmented);
  if (!reduced.pivots.empty() && reduced.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < reduced.pivots.size(); ++i) x[reduced.pivots[i]] = reduced.matrix(i, a.cols());
  return x;
}

}  // namespace skewcoh
