#include "skewcoh/deformation.hpp"

#include <sstream>

namespace skewcoh {

namespace {

Word group_word(std::size_t k) { return k == 0 ? Word{} : Word{Letter::g(k)}; }

Letter v_letter(std::size_t m) { return m == 0 ? Letter::v1() : Letter::v2(); }

void accumulate(WordCombination& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Monomial to_monomial(const Word& w) {
  Monomial m;
  for (const auto& letter : w) {
    switch (letter.kind) {
      case LetterKind::V1:
        ++m.a;
        break;
      case LetterKind::V2:
        ++m.b;
        break;
      case LetterKind::G:
        m.c = letter.power;
        break;
    }
  }
  return m;
}

DeformationParams transvection_params(std::int64_t p) {
  const FieldSpec field = FieldSpec::prime(p);
  return zero_params(CyclicGroup::from_generator(Matrix::from_ints(field, {{1, 1}, {0, 1}})));
}

}  // namespace

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    switch (w[i].kind) {
      case LetterKind::V1:
        os << "v1";
        break;
      case LetterKind::V2:
        os << "v2";
        break;
      case LetterKind::G:
        os << "g";
        if (w[i].power != 1) os << '^' << w[i].power;
        break;
    }
  }
  return os.str();
}

void AlgebraElement::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool bare = m.a == 0 && m.b == 0 && m.c == 0;
    if (!c.is_one() || bare) os << c;
    auto factor = [&](const char* name, std::size_t e) {
      if (e == 0) return;
      os << name;
      if (e != 1) os << '^' << e;
    };
    factor("v1", m.a);
    factor("v2", m.b);
    factor("g", m.c);
  }
  return os.str();
}

DeformationParams zero_params(const CyclicGroup& group) {
  if (group.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "deformations are only built for n = 2");
  const FieldSpec field = group.field();
  const std::size_t order = group.order();
  return DeformationParams{group,
                           std::vector<std::vector<GroupAlgebraElement>>(
                               order, std::vector<GroupAlgebraElement>(2, zero_vector(field, order))),
                           std::vector<Vector>(order, zero_vector(field, 2))};
}

DeformationParams builtin_transvection_gamma(std::int64_t p) {
  DeformationParams params = transvection_params(p);
  const FieldSpec field = params.group.field();
  const std::size_t order = params.group.order();
  for (std::size_t i = 0; i < order; ++i) {
    const std::size_t next = (i + 1) % order;
    params.lambda_table[i][0][next] = Scalar(field, static_cast<std::int64_t>(i));
    params.lambda_table[i][1][next] = Scalar(field, static_cast<std::int64_t>(binomial(i + 1, 2)));
  }
  params.kappa[1 % order][1] = Scalar::one(field);
  return params;
}

DeformationParams adversarial_params(std::int64_t p) {
  DeformationParams params = builtin_transvection_gamma(p);
  const FieldSpec field = params.group.field();
  params.lambda_table[1][0] = unit_vector(field, params.group.order(), 0);
  return params;
}

std::vector<GroupAlgebraElement> square_bracket_transvection(const DeformationParams& params) {
  const CyclicGroup& group = params.group;
  const FieldSpec field = group.field();
  const std::size_t order = group.order();
  if (group.dim() != 2) throw Error(ErrorCode::UnsupportedGroupShape, "the bracket is only defined for n = 2");
  const Matrix n = group.generator() - Matrix::identity(field, 2);
  if (n.is_zero() || !(n * n).is_zero()) {
    throw Error(ErrorCode::UnsupportedGroupShape, "generator must satisfy (g - 1)^2 = 0, g != 1");
  }
  for (std::size_t k = 0; k < order; ++k) {
    const bool allowed = k == 1 && params.kappa[k][0].is_zero();
    if (!allowed && !is_zero(params.kappa[k])) {
      throw Error(ErrorCode::UnsupportedKappaShape, "kappa must be a multiple of v2 (x) g");
    }
  }
  const Scalar c = params.kappa[1][1];

  // gamma(x (x) v_k) for x in FG, extended linearly from the table.
  auto gamma = [&](const GroupAlgebraElement& x, std::size_t k) {
    GroupAlgebraElement out = zero_vector(field, order);
    for (std::size_t j = 0; j < order; ++j) {
      if (!x[j].is_zero()) out = out + x[j] * params.lambda_table[j][k];
    }
    return out;
  };

  std::vector<GroupAlgebraElement> values;
  for (std::size_t i = 0; i < order; ++i) {
    const GroupAlgebraElement& on_v1 = params.lambda_table[i][0];
    const GroupAlgebraElement& on_v2 = params.lambda_table[i][1];
    GroupAlgebraElement times_g = zero_vector(field, order);
    for (std::size_t j = 0; j < order; ++j) times_g[(j + 1) % order] = on_v2[j];
    values.push_back(gamma(on_v2, 0) - gamma(on_v1, 1) + c * times_g);
  }
  return values;
}

RewriteSystem::RewriteSystem(DeformationParams params) : params_(std::move(params)) {
  const CyclicGroup& g = params_.group;
  if (g.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "orbifold algebras are only built for n = 2");
  const FieldSpec field = g.field();
  const std::size_t order = g.order();
  if (params_.lambda_table.size() != order || params_.kappa.size() != order) {
    throw Error(ErrorCode::DimensionMismatch, "parameter tables must have one entry per group element");
  }
  const Scalar one = Scalar::one(field);

  for (std::size_t a = 1; a < order; ++a) {
    for (std::size_t b = 1; b < order; ++b) {
      rules_.push_back({{Letter::g(a), Letter::g(b)}, {{group_word((a + b) % order), one}}});
    }
  }
  for (std::size_t i = 1; i < order; ++i) {
    const Matrix& h = g.power(i);
    for (std::size_t k = 0; k < 2; ++k) {
      WordCombination rhs;
      for (std::size_t m = 0; m < 2; ++m) accumulate(rhs, concat({v_letter(m)}, group_word(i)), h(m, k));
      for (std::size_t j = 0; j < order; ++j) accumulate(rhs, group_word(j), params_.lambda_table[i][k][j]);
      rules_.push_back({{Letter::g(i), v_letter(k)}, std::move(rhs)});
    }
  }
  WordCombination commute{{{Letter::v1(), Letter::v2()}, one}};
  for (std::size_t j = 0; j < order; ++j) {
    for (std::size_t m = 0; m < 2; ++m) accumulate(commute, concat({v_letter(m)}, group_word(j)), params_.kappa[j][m]);
  }
  rules_.push_back({{Letter::v2(), Letter::v1()}, std::move(commute)});

  for (std::size_t r = 0; r < rules_.size(); ++r) index_.emplace(std::make_pair(rules_[r].lhs[0], rules_[r].lhs[1]), r);
}

const Rule* RewriteSystem::find_rule(const Letter& left, const Letter& right) const {
  auto it = index_.find({left, right});
  return it == index_.end() ? nullptr : &rules_[it->second];
}

WordCombination RewriteSystem::rewrite_at(const Word& word, std::size_t pos, const Scalar& coeff) const {
  if (pos + 1 >= word.size()) throw Error(ErrorCode::InvalidInput, "rewrite position out of range");
  const Rule* rule = find_rule(word[pos], word[pos + 1]);
  if (!rule) throw Error(ErrorCode::InvalidInput, "no rule applies at position " + std::to_string(pos));
  WordCombination out;
  const Word prefix(word.begin(), word.begin() + pos);
  const Word suffix(word.begin() + pos + 2, word.end());
  for (const auto& [w, c] : rule->rhs) accumulate(out, concat(concat(prefix, w), suffix), coeff * c);
  return out;
}

bool RewriteSystem::is_irreducible(const Word& word) const {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (find_rule(word[i], word[i + 1])) return false;
  }
  return true;
}

RewriteSystem orbifold_algebra(const DeformationParams& params) { return RewriteSystem(params); }

AlgebraElement normal_form(const RewriteSystem& rs, const WordCombination& combination) {
  WordCombination pending = combination;
  AlgebraElement out(rs.field());
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    const Word word = it->first;
    const Scalar coeff = it->second;
    pending.erase(it);
    std::size_t pos = 0;
    while (pos + 1 < word.size() && !rs.find_rule(word[pos], word[pos + 1])) ++pos;
    if (pos + 1 >= word.size()) {
      out.add(to_monomial(word), coeff);
      continue;
    }
    if (++steps > RewriteSystem::kStepBudget) throw Error(ErrorCode::InternalInvariant, "rewriting step budget exhausted");
    for (const auto& [w, c] : rs.rewrite_at(word, pos, coeff)) accumulate(pending, w, c);
  }
  return out;
}

AlgebraElement normal_form(const RewriteSystem& rs, const Word& word) {
  return normal_form(rs, WordCombination{{word, Scalar::one(rs.field())}});
}

Word monomial_word(const Monomial& m) {
  Word w(m.a, Letter::v1());
  w.insert(w.end(), m.b, Letter::v2());
  if (m.c != 0) w.push_back(Letter::g(m.c));
  return w;
}

AlgebraElement multiply(const RewriteSystem& rs, const AlgebraElement& x, const AlgebraElement& y) {
  WordCombination product;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) accumulate(product, concat(monomial_word(mx), monomial_word(my)), cx * cy);
  }
  return normal_form(rs, product);
}

ConfluenceResult confluence_check(const RewriteSystem& rs, std::size_t max_overlap_len) {
  std::vector<Letter> alphabet{Letter::v1(), Letter::v2()};
  for (std::size_t k = 1; k < rs.group().order(); ++k) alphabet.push_back(Letter::g(k));
  const Scalar one = Scalar::one(rs.field());

  ConfluenceResult result;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_overlap_len; ++len) {
    std::vector<Word> next;
    for (const auto& prefix : layer) {
      for (const auto& letter : alphabet) next.push_back(concat(prefix, {letter}));
    }
    layer = std::move(next);
    for (const auto& word : layer) {
      ++result.words_checked;
      std::optional<std::size_t> first_pos;
      std::optional<AlgebraElement> first;
      for (std::size_t pos = 0; pos + 1 < word.size(); ++pos) {
        if (!rs.find_rule(word[pos], word[pos + 1])) continue;
        AlgebraElement reduced = normal_form(rs, rs.rewrite_at(word, pos, one));
        if (!first) {
          first_pos = pos;
          first = std::move(reduced);
        } else if (!(reduced == *first)) {
          result.passed = false;
          result.witness = ConfluenceWitness{word, *first_pos, pos, *first, std::move(reduced)};
          return result;
        }
      }
    }
  }
  return result;
}

std::size_t count_irreducible_words(const RewriteSystem& rs, std::size_t d) {
  std::vector<Letter> alphabet{Letter::v1(), Letter::v2()};
  for (std::size_t k = 1; k < rs.group().order(); ++k) alphabet.push_back(Letter::g(k));
  const std::size_t max_length = 2 * d + 1;
  std::size_t count = 0;
  // Irreducibility only depends on adjacent pairs, so extending irreducible
  // words one admissible letter at a time reaches all of them.
  auto visit = [&](auto&& self, const Word& word, std::size_t degree) -> void {
    ++count;
    if (word.size() == max_length) return;
    for (const auto& letter : alphabet) {
      const std::size_t next_degree = degree + (letter.kind == LetterKind::G ? 0 : 1);
      if (next_degree > d) continue;
      if (!word.empty() && rs.find_rule(word.back(), letter)) continue;
      self(self, concat(word, {letter}), next_degree);
    }
  };
  visit(visit, Word{}, 0);
  return count;
}

HilbertResult hilbert_check(const RewriteSystem& rs, std::size_t d) {
  const ConfluenceResult confluence = confluence_check(rs);
  if (!confluence.passed) {
    throw Error(ErrorCode::PrerequisiteFailed, "rewrite system is not confluent (witness " +
                                                   to_string(confluence.witness->word) + ")");
  }
  HilbertResult out;
  out.degree = d;
  out.count = count_irreducible_words(rs, d);
  out.expected = rs.group().order() * binomial(d + 2, 2);
  out.passed = out.count == out.expected;
  return out;
}

}  // namespace skewcoh
