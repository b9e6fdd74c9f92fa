#include <gtest/gtest.h>

#include <random>

#include "skewcoh/linalg.hpp"
#include "suite.hpp"

using namespace skewcoh;
using skewcoh::testing::random_matrix;
using skewcoh::testing::random_scalar;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec Q = FieldSpec::rational();

Subspace span_ints(FieldSpec f, std::size_t n, const std::vector<std::vector<std::int64_t>>& rows) {
  return Subspace::span(Matrix::from_ints(f, rows).row_block(0, rows.size()));
}

}  // namespace

TEST(Field, RejectsCharacteristicTwoAndComposites) {
  try {
    FieldSpec::prime(2);
    FAIL() << "p = 2 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CharTwo);
  }
  for (std::int64_t bad : {0, 1, 9, 15, -3}) {
    try {
      FieldSpec::prime(bad);
      FAIL() << bad << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidField);
    }
  }
  EXPECT_EQ(FieldSpec::prime(2147483647).characteristic(), 2147483647);
  EXPECT_THROW(FieldSpec::prime(2147483659), Error);
}

TEST(Field, ResiduesAndFractions) {
  EXPECT_EQ(Scalar(F5, -1).residue(), 4);
  EXPECT_EQ(Scalar(F5, 12).residue(), 2);
  EXPECT_EQ(Scalar::parse(F5, "1/2").residue(), 3);
  EXPECT_EQ(Scalar::parse(F5, "-3").residue(), 2);
  EXPECT_EQ(Scalar::parse(Q, "6/-4").rational(), Rational(-3, 2));
  EXPECT_EQ(Scalar::parse(Q, "6/-4").to_string(), "-3/2");
  EXPECT_THROW(Scalar::parse(F5, "1/5"), Error);
  EXPECT_THROW(Scalar::parse(Q, "1/0"), Error);
  EXPECT_THROW(Scalar::parse(Q, "abc"), Error);
  EXPECT_THROW(Scalar::zero(F3).inverse(), Error);
  EXPECT_EQ(Scalar(F5, 2).pow(-1), Scalar(F5, 3));
  EXPECT_EQ(Scalar(F5, 2).pow(4), Scalar::one(F5));
  EXPECT_THROW(Scalar(F3, 1) + Scalar(F5, 1), Error);
  EXPECT_EQ(Scalar(F3, 1), Scalar(F3, 4));
}

TEST(Field, AxiomsHoldOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (FieldSpec f : {F3, F5, FieldSpec::prime(2147483647), Q}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar a = random_scalar(f, rng);
      const Scalar b = random_scalar(f, rng);
      const Scalar c = random_scalar(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a + (-a), Scalar::zero(f));
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(Rref, SpecExamples) {
  auto id = rref(Matrix::identity(F3, 2));
  EXPECT_TRUE(id.matrix.is_identity());
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

  auto zero = rref(Matrix(F3, 2, 2));
  EXPECT_TRUE(zero.matrix.is_zero());
  EXPECT_TRUE(zero.pivots.empty());

  const Matrix g = Matrix::from_ints(F3, {{1, 1}, {0, 1}});
  auto r = rref(g - Matrix::identity(F3, 2));
  EXPECT_EQ(r.matrix, Matrix::from_ints(F3, {{0, 1}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{1}));
}

TEST(Rref, IdempotentAndRankNullity) {
  std::mt19937_64 rng(11);
  for (FieldSpec f : {F3, F5, Q}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 5;
      const std::size_t cols = 1 + rng() % 5;
      Matrix m = random_matrix(f, rows, cols, rng);
      if (trial % 3 == 0 && rows > 1) m.set_row(rows - 1, m.row(0) + m.row(rows - 2));
      const RrefResult once = rref(m);
      EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
      for (std::size_t k = 1; k < once.pivots.size(); ++k) EXPECT_LT(once.pivots[k - 1], once.pivots[k]);
      const Subspace ker = kernel_basis(m);
      EXPECT_EQ(rank(m) + ker.dim(), cols);
      for (const auto& v : ker.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
      EXPECT_EQ(image_basis(m).dim(), rank(m));
    }
  }
}

TEST(Subspaces, KernelImageExamples) {
  const Matrix one_minus_g = Matrix::identity(F3, 2) - Matrix::from_ints(F3, {{1, 1}, {0, 1}});
  EXPECT_EQ(kernel_basis(one_minus_g), span_ints(F3, 2, {{1, 0}}));
  EXPECT_EQ(image_basis(one_minus_g), span_ints(F3, 2, {{1, 0}}));
  EXPECT_EQ(kernel_basis(Matrix::identity(F3, 2)).dim(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(F3, 2, 2)), Subspace::full(F3, 2));
  EXPECT_EQ(image_basis(Matrix::identity(Q, 3)), Subspace::full(Q, 3));
  EXPECT_EQ(image_basis(Matrix(Q, 3, 3)).dim(), 0u);
}

TEST(Subspaces, ComplementExamples) {
  EXPECT_EQ(complement(span_ints(F5, 2, {{1, 0}})), span_ints(F5, 2, {{0, 1}}));
  EXPECT_EQ(complement(Subspace::full(F5, 2)).dim(), 0u);
  EXPECT_EQ(complement(span_ints(F5, 2, {{1, 1}})), span_ints(F5, 2, {{0, 1}}));
}

TEST(Subspaces, ComplementIsDirect) {
  std::mt19937_64 rng(3);
  for (FieldSpec f : {F3, F5, Q}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const Subspace u = Subspace::span(random_matrix(f, rng() % (n + 1), n, rng));
      const Subspace c = complement(u);
      EXPECT_EQ(u.dim() + c.dim(), n);
      EXPECT_EQ(intersect(u, c).dim(), 0u);
      EXPECT_EQ(sum(u, c), Subspace::full(f, n));
    }
  }
}

TEST(Subspaces, EigenspaceExamples) {
  const Matrix d = Matrix::from_ints(F5, {{1, 0}, {0, -1}});
  EXPECT_EQ(eigenspace(d, Scalar::one(F5)), span_ints(F5, 2, {{1, 0}}));
  EXPECT_EQ(eigenspace(d, -Scalar::one(F5)), span_ints(F5, 2, {{0, 1}}));
  EXPECT_EQ(eigenspace(Matrix::from_ints(F3, {{1, 1}, {0, 1}}), Scalar::one(F3)), span_ints(F3, 2, {{1, 0}}));
  EXPECT_THROW(eigenspace(Matrix(F3, 2, 3), Scalar::one(F3)), Error);
}

TEST(Subspaces, LatticeAndQuotient) {
  EXPECT_EQ(sum(span_ints(F5, 2, {{1, 0}}), span_ints(F5, 2, {{0, 1}})), Subspace::full(F5, 2));
  EXPECT_EQ(intersect(span_ints(F5, 2, {{1, 0}}), span_ints(F5, 2, {{1, 1}})).dim(), 0u);
  const Subspace plane = span_ints(Q, 3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_TRUE(plane.contains(Vector{Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 1)}));
  EXPECT_FALSE(plane.contains(Vector{Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0)}));
  EXPECT_EQ(intersect(plane, span_ints(Q, 3, {{1, 0, -1}, {0, 0, 1}})), span_ints(Q, 3, {{1, 0, -1}}));
  EXPECT_THROW(sum(Subspace(Q, 2), Subspace(Q, 3)), Error);

  const Matrix qmap = quotient_basis(span_ints(F5, 2, {{1, 0}}));
  EXPECT_EQ(qmap, Matrix::from_ints(F5, {{0, 1}}));
  const Subspace u = span_ints(F5, 3, {{1, 2, 0}});
  const Matrix coords = quotient_basis(u);
  EXPECT_EQ(kernel_basis(coords), u);
  for (const auto& c : complement(u).basis_vectors()) EXPECT_FALSE(is_zero(coords * c));
}

TEST(Matrices, InverseDeterminantWedge) {
  const Matrix g = Matrix::from_ints(F3, {{1, 1}, {0, 1}});
  EXPECT_EQ(inverse(g).transpose(), Matrix::from_ints(F3, {{1, 0}, {-1, 1}}));
  EXPECT_THROW(inverse(Matrix(F3, 2, 2)), Error);
  EXPECT_EQ(wedge2(Matrix::from_ints(F5, {{2, 0}, {0, 3}})), Matrix::from_ints(F5, {{1}}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_matrix(Q, 3, 3, rng);
    const Matrix b = random_matrix(Q, 3, 3, rng);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    EXPECT_EQ(wedge2(a * b), wedge2(a) * wedge2(b));
    EXPECT_EQ(kronecker(a, b) * kronecker(b, a), kronecker(a * b, b * a));
  }
  EXPECT_EQ(wedge2_index(4, 1, 3), 4u);
  EXPECT_EQ(binomial(5, 2), 10u);
}
