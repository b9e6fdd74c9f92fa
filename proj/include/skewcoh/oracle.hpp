#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skewcoh/group.hpp"

namespace skewcoh {

/// Degree -1 two-cochain on the h = g^i piece. The functional `lambda` is
/// tagged with the group element hg, `alpha` with h. Column p of `alpha` is
/// alpha(e_a ^ e_b) for the p-th pair a < b.
struct CochainTwo {
  std::size_t element_index = 0;
  Vector lambda;
  Matrix alpha;

  /// Flat coordinates: lambda(e_0..e_{n-1}) then alpha pair by pair, so
  /// alpha(pair p)[r] sits at n + p * n + r.
  Vector to_flat() const;
  static CochainTwo from_flat(std::size_t element_index, std::size_t n, const Vector& flat);
  static CochainTwo zero(FieldSpec field, std::size_t element_index, std::size_t n);
  std::size_t lambda_tag(std::size_t order) const { return (element_index + 1) % order; }

  friend bool operator==(const CochainTwo&, const CochainTwo&) = default;
};

/// The f_h component of a one-cochain V -> FG.
struct CochainOne {
  std::size_t element_index = 0;
  Vector f;

  friend bool operator==(const CochainOne&, const CochainOne&) = default;
};

std::size_t cochain_dim(std::size_t n);
/// Index of the monomial e_r e_s (r <= s, lexicographic) in Sym^2 of F^n.
std::size_t sym2_index(std::size_t n, std::size_t r, std::size_t s);

/// alpha(x ^ y) for arbitrary x, y, extended bilinearly and antisymmetrically.
Vector alpha_on(const CochainTwo& c, const Vector& x, const Vector& y);

/// Rows are linear conditions on flat cochain coordinates at h = g^i: first
/// lambda on a basis of im T, then the twisted invariance condition pair by
/// pair, then the cyclic Sym^2 condition triple by triple.
Matrix cocycle_conditions(const CyclicGroup& group, std::size_t i);

/// Matrix sending f_h in V* (coordinates on the dual basis) to the flat
/// cochain d(f_h) at h. The lambda part of the image carries the tag hg.
Matrix coboundary_matrix(const CyclicGroup& group, std::size_t i);
std::vector<Matrix> coboundary_map(const CyclicGroup& group);

/// Normalising constraints pinning down one cocycle per class.
Matrix distinguished_subspace(const CyclicGroup& group, std::size_t i);

struct PerElementComplex {
  std::size_t element_index = 0;
  Matrix cocycle_condition_matrix;
  Matrix coboundary_matrix;
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::size_t hh_dim = 0;
  Matrix distinguished_constraints;
};

PerElementComplex per_element_cohomology(const CyclicGroup& group, std::size_t i);

/// Basis of Z(h) cut down by the distinguished constraints. Throws
/// DimensionMismatch if its size differs from hh_dim.
std::vector<CochainTwo> representative_basis(const CyclicGroup& group, std::size_t i);

/// Returns the distinguished cocycle cohomologous to `gamma` and the
/// one-cochain f with gamma - d(f) equal to it. Throws NotACocycle.
std::pair<CochainTwo, CochainOne> reduce_to_representative(const CyclicGroup& group, const CochainTwo& gamma);

/// The whole degree -1 complex written directly in the skew group algebra,
/// with no splitting by group element. A cochain is lambda: V -> FG together
/// with alpha: L2 V -> V (x) FG; the conditions are the first order
/// consistency of g^N = 1, of g(uv - vu), and of uvw.
struct AssembledComplex {
  Matrix cocycle_condition_matrix;
  Matrix coboundary_matrix;
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
};

AssembledComplex assembled_complex(const CyclicGroup& group);

/// Position of the per-element flat coordinate `k` of h = g^i inside the
/// assembled layout (all lambdas by tag, then all alphas by element).
std::size_t assembled_index(const CyclicGroup& group, std::size_t i, std::size_t k);

}  // namespace skewcoh
