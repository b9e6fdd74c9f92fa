#include <gtest/gtest.h>

#include "skewcoh/formula.hpp"
#include "suite.hpp"

using namespace skewcoh;
using skewcoh::testing::regression_suite;
using skewcoh::testing::transvection;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec Q = FieldSpec::rational();

CyclicGroup make(FieldSpec f, std::vector<std::vector<std::int64_t>> m) {
  return CyclicGroup::from_generator(Matrix::from_ints(f, m));
}

std::vector<std::size_t> piece_dims(const SummandReport& s) {
  std::vector<std::size_t> out;
  for (const auto& p : s.pieces) out.push_back(p.second);
  return out;
}

}  // namespace

TEST(IdentityContribution, Examples) {
  const SummandReport trivial = identity_contribution(make(Q, {{1, 0}, {0, 1}}));
  EXPECT_EQ(trivial.summand_case, SummandCase::Identity);
  EXPECT_EQ(piece_dims(trivial), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(trivial.total, 2u);
  EXPECT_EQ(piece_dims(identity_contribution(CyclicGroup::from_generator(transvection(3)))),
            (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(piece_dims(identity_contribution(make(F5, {{2, 0}, {0, 3}}))), (std::vector<std::size_t>{0, 0}));
}

TEST(IdentityContribution, DualQuotientBasis) {
  const Matrix t = dual_invariant_quotient_basis(CyclicGroup::from_generator(transvection(3)));
  ASSERT_EQ(t.rows(), 1u);
  EXPECT_EQ(t, Matrix::from_ints(F3, {{1, 0}}));
  EXPECT_EQ(dual_invariant_quotient_basis(make(Q, {{1, 0}, {0, 1}})).rows(), 0u);
}

TEST(Codim1Contribution, Examples) {
  const SummandReport t = codim1_contribution(CyclicGroup::from_generator(transvection(3)), 1);
  EXPECT_EQ(piece_dims(t), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(t.total, 2u);
  const SummandReport d = codim1_contribution(make(F5, {{1, 0}, {0, -1}}), 1);
  EXPECT_EQ(piece_dims(d), (std::vector<std::size_t>{0, 0}));
  try {
    codim1_contribution(make(F5, {{2, 0}, {0, 3}}), 1);
    FAIL() << "codim 2 element accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongCase);
  }
  // A diagonalizable reflection of order coprime to p, split spectrum.
  EXPECT_EQ(codim1_contribution(make(Q, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1).total, 0u);
}

TEST(Codim2Contribution, Examples) {
  const CyclicGroup d = make(F5, {{2, 0}, {0, 3}});
  EXPECT_EQ(codim2_contribution(d, 1).total, 0u);
  EXPECT_EQ(codim2_contribution(d, 2).total, 0u);
  EXPECT_EQ(codim2_contribution(make(F5, {{0, -1}, {1, 0}}), 2).total, 0u);
  EXPECT_EQ(codim2_contribution(make(Q, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), 1).total, 1u);
  EXPECT_THROW(codim2_contribution(CyclicGroup::from_generator(transvection(3)), 1), Error);
}

TEST(FullReport, TransvectionsGiveTwoP) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const CohomologyReport r = full_report(CyclicGroup::from_generator(transvection(p)));
    EXPECT_EQ(r.total_dim, static_cast<std::size_t>(2 * p));
    for (const auto& s : r.per_element) EXPECT_EQ(s.total, 2u);
  }
}

TEST(FullReport, OtherExamples) {
  EXPECT_EQ(full_report(make(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).total_dim, 9u);
  EXPECT_EQ(full_report(make(F5, {{1, 0}, {0, -1}})).total_dim, 1u);
  EXPECT_EQ(full_report(make(F5, {{2, 0}, {0, 3}})).total_dim, 0u);
  const CohomologyReport deep = full_report(make(F3, {{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(deep.per_element[1].summand_case, SummandCase::Vanishing);
  EXPECT_EQ(deep.per_element[1].total, 0u);
}

TEST(FullReport, InvariantsOnSuite) {
  for (const auto& entry : regression_suite()) {
    const CyclicGroup group = entry.group();
    const CohomologyReport r = full_report(group);
    std::size_t total = 0;
    for (const auto& s : r.per_element) {
      std::size_t pieces = 0;
      for (const auto& p : s.pieces) pieces += p.second;
      EXPECT_EQ(pieces, s.total) << entry.name;
      const std::size_t codim = element_data(group, s.element_index).codim;
      EXPECT_EQ(s.summand_case == SummandCase::Vanishing, codim > 2) << entry.name;
      if (codim > 2) EXPECT_EQ(s.total, 0u);
      total += s.total;
    }
    EXPECT_EQ(total, r.total_dim) << entry.name;
  }
}

TEST(Crosscheck, Examples) {
  const CrosscheckReport diag = nonmodular_crosscheck(make(F5, {{2, 0}, {0, 3}}));
  EXPECT_EQ(diag.reflections, CheckStatus::Pass);
  EXPECT_EQ(diag.determinant, CheckStatus::Pass);
  const CrosscheckReport refl = nonmodular_crosscheck(make(F5, {{1, 0}, {0, -1}}));
  EXPECT_EQ(refl.reflections, CheckStatus::Pass);
  EXPECT_FALSE(refl.failed());
  const CrosscheckReport modular = nonmodular_crosscheck(CyclicGroup::from_generator(transvection(3)));
  EXPECT_EQ(modular.reflections, CheckStatus::NotApplicable);
  EXPECT_EQ(modular.determinant, CheckStatus::NotApplicable);
  // x^2 + 1 has no rational root.
  const CrosscheckReport rotation = nonmodular_crosscheck(make(Q, {{0, -1}, {1, 0}}));
  EXPECT_EQ(rotation.reflections, CheckStatus::Pass);
  EXPECT_EQ(rotation.determinant, CheckStatus::NotApplicable);
}

TEST(Crosscheck, DetectsViolations) {
  const CyclicGroup group = make(F5, {{1, 0}, {0, -1}});
  CohomologyReport tampered = full_report(group);
  tampered.per_element[1].total = 1;
  const CrosscheckReport r = nonmodular_crosscheck(group, tampered);
  EXPECT_EQ(r.reflections, CheckStatus::Fail);
  EXPECT_EQ(r.determinant, CheckStatus::Fail);
  EXPECT_TRUE(r.failed());
  EXPECT_EQ(r.violations.size(), 2u);
}

TEST(Crosscheck, SplittingTest) {
  EXPECT_EQ(characteristic_polynomial_splits(make(F5, {{0, -1}, {1, 0}})), std::optional<bool>(true));
  EXPECT_EQ(characteristic_polynomial_splits(make(F3, {{0, -1}, {1, 0}})), std::optional<bool>(false));
  EXPECT_EQ(characteristic_polynomial_splits(make(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})), std::optional<bool>(false));
  EXPECT_EQ(characteristic_polynomial_splits(make(Q, {{-1, 0}, {0, 1}})), std::optional<bool>(true));
}
