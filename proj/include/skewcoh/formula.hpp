#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skewcoh/group.hpp"

namespace skewcoh {

enum class SummandCase { Identity, Codim1, Codim2, Vanishing };

const char* to_string(SummandCase c);

struct SummandReport {
  std::size_t element_index = 0;
  SummandCase summand_case = SummandCase::Vanishing;
  /// (name, dimension) in the order the closed form lists them.
  std::vector<std::pair<std::string, std::size_t>> pieces;
  std::size_t total = 0;

  friend bool operator==(const SummandReport&, const SummandReport&) = default;
};

struct CohomologyReport {
  std::vector<SummandReport> per_element;
  std::size_t total_dim = 0;

  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

SummandReport identity_contribution(const CyclicGroup& group);
/// Throws WrongCase unless codim V^h = 1.
SummandReport codim1_contribution(const CyclicGroup& group, std::size_t i);
/// Throws WrongCase unless codim V^h = 2.
SummandReport codim2_contribution(const CyclicGroup& group, std::size_t i);
/// Dispatches on the codimension; anything past 2 contributes nothing.
SummandReport element_contribution(const CyclicGroup& group, std::size_t i);
CohomologyReport full_report(const CyclicGroup& group);

/// Functionals on V (as rows) vanishing on im T and on the complement of V^G;
/// a basis of (V^G / im T)* read in those coordinates.
Matrix dual_invariant_quotient_basis(const CyclicGroup& group);

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* to_string(CheckStatus s);

struct CrosscheckReport {
  /// Coprime order: every reflection contributes 0.
  CheckStatus reflections = CheckStatus::NotApplicable;
  /// Coprime order and split characteristic polynomial: codim 1 and 2
  /// elements with det(h) != 1 contribute 0.
  CheckStatus determinant = CheckStatus::NotApplicable;
  std::vector<std::string> violations;

  bool failed() const { return reflections == CheckStatus::Fail || determinant == CheckStatus::Fail; }
};

/// True if the characteristic polynomial of g is a product of linear factors
/// over the base field. Only eigenvalues c with c^N = 1 can occur, so over Q
/// these are +-1 and over F_p they are found by search. nullopt when the
/// prime is too large to search.
std::optional<bool> characteristic_polynomial_splits(const CyclicGroup& group);

CrosscheckReport nonmodular_crosscheck(const CyclicGroup& group, const CohomologyReport& report);
CrosscheckReport nonmodular_crosscheck(const CyclicGroup& group);

}  // namespace skewcoh
