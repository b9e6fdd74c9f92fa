#pragma once

// Elements of the skew group algebra that the assembled complex needs:
// FG, V (x) FG and Sym^2 V (x) FG, always written with the group part on the
// right, x g^k.

#include <cstddef>
#include <vector>

#include "skewcoh/group.hpp"

namespace skewcoh::detail {

class SkewContext {
 public:
  explicit SkewContext(const CyclicGroup& group) : group_(group) {}

  std::size_t order() const { return group_.order(); }
  std::size_t n() const { return group_.dim(); }
  FieldSpec field() const { return group_.field(); }

  using GroupPart = Vector;               // coefficient of g^k at k
  using VectorPart = std::vector<Vector>;  // V-coefficient of g^k at k

  GroupPart zero_group() const { return zero_vector(field(), order()); }
  VectorPart zero_vector_part() const { return VectorPart(order(), zero_vector(field(), n())); }
  VectorPart zero_sym2_part() const { return VectorPart(order(), zero_vector(field(), n() * (n() + 1) / 2)); }

  /// g^m * c and c * g^m coincide in the commutative group algebra.
  GroupPart shift(const GroupPart& c, std::size_t m) const {
    GroupPart out = zero_group();
    for (std::size_t k = 0; k < order(); ++k) out[(k + m) % order()] = c[k];
    return out;
  }

  GroupPart multiply(const GroupPart& a, const GroupPart& b) const {
    GroupPart out = zero_group();
    for (std::size_t j = 0; j < order(); ++j) {
      if (a[j].is_zero()) continue;
      for (std::size_t k = 0; k < order(); ++k) out[(j + k) % order()] += a[j] * b[k];
    }
    return out;
  }

  /// g^m (sum x_k g^k) = sum (g^m x_k) g^(m+k).
  VectorPart left_by_group(std::size_t m, const VectorPart& x) const {
    VectorPart out = zero_vector_part();
    for (std::size_t k = 0; k < order(); ++k) out[(k + m) % order()] = group_.power(m) * x[k];
    return out;
  }

  VectorPart right_by_group(const VectorPart& x, std::size_t m) const {
    VectorPart out = zero_vector_part();
    for (std::size_t k = 0; k < order(); ++k) out[(k + m) % order()] = x[k];
    return out;
  }

  /// u * c
  VectorPart vector_times_group(const Vector& u, const GroupPart& c) const {
    VectorPart out = zero_vector_part();
    for (std::size_t k = 0; k < order(); ++k) out[k] = c[k] * u;
    return out;
  }

  /// c * u = sum c_k (g^k u) g^k
  VectorPart group_times_vector(const GroupPart& c, const Vector& u) const {
    VectorPart out = zero_vector_part();
    for (std::size_t k = 0; k < order(); ++k) out[k] = c[k] * (group_.power(k) * u);
    return out;
  }

  /// u (x g^k) - (x g^k) u = x (u - g^k u) g^k, multiplied out in Sym^2 V.
  VectorPart commutator(const Vector& u, const VectorPart& x) const {
    VectorPart out = zero_sym2_part();
    for (std::size_t k = 0; k < order(); ++k) {
      const Vector moved = group_.power(k) * u;
      add_product(out[k], u, x[k], Scalar::one(field()));
      add_product(out[k], x[k], moved, -Scalar::one(field()));
    }
    return out;
  }

  static void add(VectorPart& acc, const VectorPart& x, const Scalar& c) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = acc[k] + c * x[k];
  }

 private:
  void add_product(Vector& acc, const Vector& a, const Vector& b, const Scalar& c) const {
    for (std::size_t r = 0; r < n(); ++r) {
      if (a[r].is_zero()) continue;
      for (std::size_t s = 0; s < n(); ++s) {
        if (b[s].is_zero()) continue;
        const std::size_t lo = r < s ? r : s;
        const std::size_t hi = r < s ? s : r;
        acc[lo * (2 * n() - lo + 1) / 2 + (hi - lo)] += c * a[r] * b[s];
      }
    }
  }

  const CyclicGroup& group_;
};

}  // namespace skewcoh::detail
