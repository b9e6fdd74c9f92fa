#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewcoh/linalg.hpp"

namespace skewcoh {

/// A finite cyclic group G = <g> inside GL_n(F), with every power cached.
class CyclicGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 10000;

  /// Computes the order of `generator` by iterating powers. Throws
  /// NotInvertible for singular input and OrderExceedsBound when no power up
  /// to `max_order` is the identity.
  static CyclicGroup from_generator(const Matrix& generator, std::size_t max_order = kDefaultMaxOrder);

  FieldSpec field() const { return generator().field(); }
  std::size_t dim() const { return generator().rows(); }
  std::size_t order() const { return powers_.size(); }
  const Matrix& generator() const { return powers_.size() > 1 ? powers_[1] : powers_[0]; }
  /// g^i, with i taken modulo the order.
  const Matrix& power(std::size_t i) const { return powers_[i % powers_.size()]; }
  const Matrix& inverse_power(std::size_t i) const;
  const std::vector<Matrix>& powers() const { return powers_; }
  /// Index of h * g, i.e. (i + 1) mod N.
  std::size_t shifted_index(std::size_t i) const { return (i + 1) % powers_.size(); }

 private:
  explicit CyclicGroup(std::vector<Matrix> powers) : powers_(std::move(powers)) {}
  std::vector<Matrix> powers_;
};

/// Per-element geometry for h = g^i.
struct ElementData {
  std::size_t index = 0;
  Subspace fixed_space;        // V^h = ker(1 - h)
  Subspace moved_space;        // V_h = im(1 - h)
  std::size_t codim = 0;       // codim V^h
  Subspace fixed_complement;   // chosen complement of V^h
  Subspace moved_complement;   // chosen complement of V_h
  Scalar chi_of_generator;     // chi_h(g) = det of g on V / V^h
};

struct TransferData {
  Matrix matrix;   // T = sum over G
  Subspace image;  // im T
};

TransferData transfer(const CyclicGroup& group);
ElementData element_data(const CyclicGroup& group, std::size_t i);
std::vector<ElementData> all_element_data(const CyclicGroup& group);

/// V^G, which for a cyclic group is ker(1 - g).
Subspace invariant_space(const CyclicGroup& group);

/// Modules on which G acts through the natural constructions.
struct Module {
  enum class Kind { V, DualV, Wedge2V, VTensorWedge2Dual, QuotientBy, DualRestrictedTo };
  Kind kind = Kind::V;
  std::optional<Subspace> subspace;

  static Module v() { return {Kind::V, std::nullopt}; }
  static Module dual_v() { return {Kind::DualV, std::nullopt}; }
  static Module wedge2_v() { return {Kind::Wedge2V, std::nullopt}; }
  static Module v_tensor_wedge2_dual() { return {Kind::VTensorWedge2Dual, std::nullopt}; }
  static Module quotient_by(Subspace u) { return {Kind::QuotientBy, std::move(u)}; }
  static Module dual_restricted_to(Subspace u) { return {Kind::DualRestrictedTo, std::move(u)}; }
};

/// Matrix of h = g^i on `module`. Duals use the contragredient (inverse
/// transpose); quotients use coordinates from quotient_basis(); restrictions
/// use the RREF basis of the subspace. Throws NotGStable when a quotient or
/// restriction subspace is not preserved by G.
Matrix induced_action(const CyclicGroup& group, std::size_t i, const Module& module);

/// True when g maps `u` into itself (enough for the whole cyclic group).
bool is_g_stable(const CyclicGroup& group, const Subspace& u);

/// Matrix of `action` (n x n acting on V) on V/u, in quotient_basis(u) coordinates.
Matrix quotient_action(const Matrix& action, const Subspace& u);
/// Matrix of `action` restricted to u, in u's RREF basis.
Matrix restricted_action(const Matrix& action, const Subspace& u);

/// M^chi for the character with chi(g) = chi_value, given g's action on M.
Subspace chi_invariants(const Matrix& action_of_g, const Scalar& chi_value);

bool is_reflection(const ElementData& data);
/// codim V^h = 1, h != 1 and (h - 1)^2 = 0.
bool is_nondiagonalizable_reflection(const CyclicGroup& group, std::size_t i);

}  // namespace skewcoh
