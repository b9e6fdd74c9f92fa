#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewcoh/group.hpp"

namespace skewcoh {

/// Group algebra element: coefficient of g^k at index k.
using GroupAlgebraElement = Vector;

/// A degree -1 cochain for n = 2: lambda(g^i (x) v_k) in FG for k = 1, 2
/// (stored at [i][k - 1]) and kappa = gamma(v2 ^ v1) in V (x) FG, stored as
/// the V-coefficient of each g^j.
struct DeformationParams {
  CyclicGroup group;
  std::vector<std::vector<GroupAlgebraElement>> lambda_table;
  std::vector<Vector> kappa;
};

/// [[1,1],[0,1]] over F_p with gamma(g^i (x) v1) = i g^(i+1),
/// gamma(g^i (x) v2) = C(i+1, 2) g^(i+1), gamma(v2 ^ v1) = v2 (x) g.
DeformationParams builtin_transvection_gamma(std::int64_t p);
DeformationParams zero_params(const CyclicGroup& group);
/// builtin_transvection_gamma(p) with lambda(g (x) v1) replaced by 1.
DeformationParams adversarial_params(std::int64_t p = 3);

/// One value of the square bracket [gamma, gamma](g^i (x) v1 ^ v2) per i.
/// Throws UnsupportedGroupShape unless (g - 1)^2 = 0 and g != 1, and
/// UnsupportedKappaShape unless kappa = c v2 (x) g.
std::vector<GroupAlgebraElement> square_bracket_transvection(const DeformationParams& params);

enum class LetterKind { V1, V2, G };

struct Letter {
  LetterKind kind = LetterKind::V1;
  std::size_t power = 0;  // only for G

  static Letter v1() { return {LetterKind::V1, 0}; }
  static Letter v2() { return {LetterKind::V2, 0}; }
  static Letter g(std::size_t k) { return {LetterKind::G, k}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string to_string(const Word& w);

/// v1^a v2^b g^c
struct Monomial {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Linear combination of normal-form monomials; zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(FieldSpec field) : field_(field) {}

  FieldSpec field() const { return field_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& m, const Scalar& c);
  std::string to_string() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  FieldSpec field_;
  std::map<Monomial, Scalar> terms_;
};

/// Linear combination of arbitrary words.
using WordCombination = std::map<Word, Scalar>;

struct Rule {
  Word lhs;  // always two letters
  WordCombination rhs;
};

/// Rewriting rules of the algebra generated by FG and V with
/// h u - (h u) h = lambda(h (x) u) and v2 v1 - v1 v2 = kappa. Right sides
/// are written in normal form v1^a v2^b g^c.
class RewriteSystem {
 public:
  static constexpr std::size_t kStepBudget = 1'000'000;

  explicit RewriteSystem(DeformationParams params);

  const DeformationParams& params() const { return params_; }
  const CyclicGroup& group() const { return params_.group; }
  FieldSpec field() const { return params_.group.field(); }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* find_rule(const Letter& left, const Letter& right) const;

  /// Applies the rule at letters (pos, pos + 1) of `word` once.
  WordCombination rewrite_at(const Word& word, std::size_t pos, const Scalar& coeff) const;
  bool is_irreducible(const Word& word) const;

 private:
  DeformationParams params_;
  std::vector<Rule> rules_;
  std::map<std::pair<Letter, Letter>, std::size_t> index_;
};

RewriteSystem orbifold_algebra(const DeformationParams& params);

/// Rewrites the leftmost reducible pair until nothing applies. Throws
/// InternalInvariant if the step budget runs out.
AlgebraElement normal_form(const RewriteSystem& rs, const WordCombination& combination);
AlgebraElement normal_form(const RewriteSystem& rs, const Word& word);
Word monomial_word(const Monomial& m);
/// normal_form of the concatenated words.
AlgebraElement multiply(const RewriteSystem& rs, const AlgebraElement& x, const AlgebraElement& y);

struct ConfluenceWitness {
  Word word;
  std::size_t first_position = 0;
  std::size_t second_position = 0;
  AlgebraElement first_result;
  AlgebraElement second_result;
};

struct ConfluenceResult {
  bool passed = true;
  std::size_t words_checked = 0;
  std::optional<ConfluenceWitness> witness;
};

/// Every word of length <= max_overlap_len over {v1, v2, g^1..g^(N-1)} is
/// rewritten once at each reducible position and then fully reduced; all
/// results must agree.
ConfluenceResult confluence_check(const RewriteSystem& rs, std::size_t max_overlap_len = 3);

/// Irreducible words with v-degree <= d.
std::size_t count_irreducible_words(const RewriteSystem& rs, std::size_t d);

struct HilbertResult {
  std::size_t degree = 0;
  std::size_t count = 0;
  std::size_t expected = 0;
  bool passed = false;
};

/// Compares count_irreducible_words with N * C(d + 2, 2). Throws
/// PrerequisiteFailed if the system is not confluent.
HilbertResult hilbert_check(const RewriteSystem& rs, std::size_t d);

}  // namespace skewcoh
