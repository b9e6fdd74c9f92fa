#include "skewcoh/group.hpp"

#include <string>

namespace skewcoh {

CyclicGroup CyclicGroup::from_generator(const Matrix& generator, std::size_t max_order) {
  if (!generator.is_square()) throw Error(ErrorCode::DimensionMismatch, "generator must be square");
  if (generator.field().is_prime() && generator.field().characteristic() == 2) {
    throw Error(ErrorCode::CharTwo, "characteristic 2 is not supported");
  }
  if (determinant(generator).is_zero()) throw Error(ErrorCode::NotInvertible, "generator is singular");
  const std::size_t n = generator.rows();
  const Matrix identity = Matrix::identity(generator.field(), n);
  std::vector<Matrix> powers{identity};
  Matrix current = generator;
  while (!(current == identity)) {
    if (powers.size() >= max_order) {
      throw Error(ErrorCode::OrderExceedsBound, "no power up to " + std::to_string(max_order) + " is the identity");
    }
    powers.push_back(current);
    current = current * generator;
  }
  return CyclicGroup(std::move(powers));
}

const Matrix& CyclicGroup::inverse_power(std::size_t i) const {
  const std::size_t n = powers_.size();
  return powers_[(n - i % n) % n];
}

TransferData transfer(const CyclicGroup& group) {
  Matrix total(group.field(), group.dim(), group.dim());
  for (const auto& h : group.powers()) total = total + h;
  Subspace image = image_basis(total);
  return {std::move(total), std::move(image)};
}

Subspace invariant_space(const CyclicGroup& group) {
  const Matrix one = Matrix::identity(group.field(), group.dim());
  return kernel_basis(one - group.generator());
}

Matrix restricted_action(const Matrix& action, const Subspace& u) {
  const std::size_t k = u.dim();
  Matrix out(action.field(), k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Vector image = action * u.basis().row(j);
    if (!u.contains(image)) throw Error(ErrorCode::NotGStable, "subspace is not preserved");
    // In an RREF basis the coefficient of row i is the entry at pivot i.
    for (std::size_t i = 0; i < k; ++i) out(i, j) = image[u.pivots()[i]];
  }
  return out;
}

Matrix quotient_action(const Matrix& action, const Subspace& u) {
  for (std::size_t r = 0; r < u.dim(); ++r) {
    if (!u.contains(action * u.basis().row(r))) throw Error(ErrorCode::NotGStable, "subspace is not preserved");
  }
  const Subspace comp = complement(u);
  const Matrix coords = quotient_basis(u);
  Matrix out(action.field(), comp.dim(), comp.dim());
  for (std::size_t j = 0; j < comp.dim(); ++j) {
    const Vector image = coords * (action * comp.basis().row(j));
    for (std::size_t i = 0; i < comp.dim(); ++i) out(i, j) = image[i];
  }
  return out;
}

ElementData element_data(const CyclicGroup& group, std::size_t i) {
  if (i >= group.order()) throw Error(ErrorCode::DimensionMismatch, "element index out of range");
  const Matrix one = Matrix::identity(group.field(), group.dim());
  const Matrix one_minus_h = one - group.power(i);
  Subspace fixed = kernel_basis(one_minus_h);
  Subspace moved = image_basis(one_minus_h);
  const std::size_t codim = group.dim() - fixed.dim();
  ensure(moved.dim() == codim, "rank-nullity on 1 - h");
  Subspace fixed_comp = complement(fixed);
  Subspace moved_comp = complement(moved);
  Scalar chi = codim == 0 ? Scalar::one(group.field()) : determinant(quotient_action(group.generator(), fixed));
  return ElementData{i, std::move(fixed), std::move(moved), codim, std::move(fixed_comp), std::move(moved_comp),
                     std::move(chi)};
}

std::vector<ElementData> all_element_data(const CyclicGroup& group) {
  std::vector<ElementData> out;
  out.reserve(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) out.push_back(element_data(group, i));
  return out;
}

bool is_g_stable(const CyclicGroup& group, const Subspace& u) {
  for (std::size_t r = 0; r < u.dim(); ++r) {
    if (!u.contains(group.generator() * u.basis().row(r))) return false;
  }
  return true;
}

Matrix induced_action(const CyclicGroup& group, std::size_t i, const Module& module) {
  const Matrix& h = group.power(i);
  const Matrix& h_inv = group.inverse_power(i);
  switch (module.kind) {
    case Module::Kind::V:
      return h;
    case Module::Kind::DualV:
      return h_inv.transpose();
    case Module::Kind::Wedge2V:
      return wedge2(h);
    case Module::Kind::VTensorWedge2Dual:
      return kronecker(h, wedge2(h_inv).transpose());
    case Module::Kind::QuotientBy:
    case Module::Kind::DualRestrictedTo: {
      if (!module.subspace) throw Error(ErrorCode::InvalidInput, "module needs a subspace");
      if (!is_g_stable(group, *module.subspace)) throw Error(ErrorCode::NotGStable, "subspace is not G-stable");
      if (module.kind == Module::Kind::QuotientBy) return quotient_action(h, *module.subspace);
      return restricted_action(h_inv, *module.subspace).transpose();
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown module kind");
}

Subspace chi_invariants(const Matrix& action_of_g, const Scalar& chi_value) {
  return eigenspace(action_of_g, chi_value);
}

bool is_reflection(const ElementData& data) { return data.codim == 1; }

bool is_nondiagonalizable_reflection(const CyclicGroup& group, std::size_t i) {
  const Matrix& h = group.power(i);
  const Matrix one = Matrix::identity(group.field(), group.dim());
  if (h == one) return false;
  const Matrix n = h - one;
  return rank(n) == 1 && (n * n).is_zero();
}

}  // namespace skewcoh
