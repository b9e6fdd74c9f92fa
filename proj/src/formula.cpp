#include "skewcoh/formula.hpp"

#include <numeric>
#include <string>

namespace skewcoh {

namespace {

constexpr std::int64_t kMaxRootSearch = 10'000'000;

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::size_t generalized_eigenspace_dim(const Matrix& g, const Scalar& c) {
  const std::size_t n = g.rows();
  const Matrix shifted = g - c * Matrix::identity(g.field(), n);
  return n - rank(shifted.pow(n));
}

SummandReport make(std::size_t i, SummandCase c, std::vector<std::pair<std::string, std::size_t>> pieces) {
  SummandReport out;
  out.element_index = i;
  out.summand_case = c;
  out.pieces = std::move(pieces);
  for (const auto& piece : out.pieces) out.total += piece.second;
  return out;
}

}  // namespace

const char* to_string(SummandCase c) {
  switch (c) {
    case SummandCase::Identity:
      return "identity";
    case SummandCase::Codim1:
      return "codim1";
    case SummandCase::Codim2:
      return "codim2";
    case SummandCase::Vanishing:
      return "vanishing";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

Matrix dual_invariant_quotient_basis(const CyclicGroup& group) {
  const Subspace fixed = invariant_space(group);
  const Subspace image = transfer(group).image;
  ensure(fixed.contains(image), "im T must lie in V^G");
  return kernel_basis(vstack(image.basis(), complement(fixed).basis())).basis();
}

SummandReport identity_contribution(const CyclicGroup& group) {
  const Subspace fixed = invariant_space(group);
  const Subspace image = transfer(group).image;
  ensure(fixed.contains(image), "im T must lie in V^G");
  const Matrix action = induced_action(group, 1 % group.order(), Module::v_tensor_wedge2_dual());
  const Subspace invariants = chi_invariants(action, Scalar::one(group.field()));
  return make(0, SummandCase::Identity,
              {{"(V^G/im T)*", fixed.dim() - image.dim()}, {"(V (x) L2 V*)^G", invariants.dim()}});
}

SummandReport codim1_contribution(const CyclicGroup& group, std::size_t i) {
  const ElementData data = element_data(group, i);
  if (data.codim != 1) throw Error(ErrorCode::WrongCase, "element " + std::to_string(i) + " is not a reflection");
  const std::size_t g = 1 % group.order();
  const Matrix quotient = induced_action(group, g, Module::quotient_by(data.moved_space));
  const Matrix dual = induced_action(group, g, Module::dual_restricted_to(data.fixed_space));
  const Subspace invariants = chi_invariants(kronecker(quotient, dual), data.chi_of_generator);
  return make(i, SummandCase::Codim1,
              {{"F^chi", data.chi_of_generator.is_one() ? 1u : 0u},
               {"(V/V_h (x) (V^h)*)^chi", invariants.dim()}});
}

SummandReport codim2_contribution(const CyclicGroup& group, std::size_t i) {
  const ElementData data = element_data(group, i);
  if (data.codim != 2) throw Error(ErrorCode::WrongCase, "element " + std::to_string(i) + " is not a bireflection");
  const Matrix quotient = induced_action(group, 1 % group.order(), Module::quotient_by(data.moved_space));
  const Subspace invariants = chi_invariants(quotient, data.chi_of_generator);
  return make(i, SummandCase::Codim2, {{"(V/V_h)^chi", invariants.dim()}});
}

SummandReport element_contribution(const CyclicGroup& group, std::size_t i) {
  if (i == 0) return identity_contribution(group);
  const ElementData data = element_data(group, i);
  switch (data.codim) {
    case 0:
      ensure(false, "non-identity element with full fixed space");
      break;
    case 1:
      return codim1_contribution(group, i);
    case 2:
      return codim2_contribution(group, i);
    default:
      break;
  }
  return make(i, SummandCase::Vanishing, {});
}

CohomologyReport full_report(const CyclicGroup& group) {
  CohomologyReport report;
  for (std::size_t i = 0; i < group.order(); ++i) {
    report.per_element.push_back(element_contribution(group, i));
    report.total_dim += report.per_element.back().total;
  }
  return report;
}

std::optional<bool> characteristic_polynomial_splits(const CyclicGroup& group) {
  const FieldSpec field = group.field();
  const Matrix& g = group.generator();
  std::size_t found = 0;
  if (field.is_rational()) {
    found += generalized_eigenspace_dim(g, Scalar::one(field));
    found += generalized_eigenspace_dim(g, -Scalar::one(field));
    return found == group.dim();
  }
  const std::int64_t p = field.characteristic();
  if (p > kMaxRootSearch) return std::nullopt;
  for (std::int64_t c = 1; c < p && found < group.dim(); ++c) {
    if (pow_mod(c, group.order(), p) != 1) continue;
    found += generalized_eigenspace_dim(g, Scalar(field, c));
  }
  return found == group.dim();
}

CrosscheckReport nonmodular_crosscheck(const CyclicGroup& group, const CohomologyReport& report) {
  CrosscheckReport out;
  const std::int64_t p = group.field().characteristic();
  const bool coprime = p == 0 || std::gcd(static_cast<std::int64_t>(group.order()), p) == 1;
  if (!coprime) return out;

  out.reflections = CheckStatus::Pass;
  const std::optional<bool> splits = characteristic_polynomial_splits(group);
  if (splits && *splits) out.determinant = CheckStatus::Pass;

  for (const auto& summand : report.per_element) {
    if (summand.summand_case == SummandCase::Codim1 && summand.total != 0) {
      out.reflections = CheckStatus::Fail;
      out.violations.push_back("reflection g^" + std::to_string(summand.element_index) + " contributes " +
                               std::to_string(summand.total));
    }
    if (out.determinant == CheckStatus::NotApplicable) continue;
    const bool low_codim =
        summand.summand_case == SummandCase::Codim1 || summand.summand_case == SummandCase::Codim2;
    if (low_codim && summand.total != 0 && !determinant(group.power(summand.element_index)).is_one()) {
      out.determinant = CheckStatus::Fail;
      out.violations.push_back("g^" + std::to_string(summand.element_index) +
                               " has det != 1 but contributes " + std::to_string(summand.total));
    }
  }
  return out;
}

CrosscheckReport nonmodular_crosscheck(const CyclicGroup& group) {
  return nonmodular_crosscheck(group, full_report(group));
}

}  // namespace skewcoh
