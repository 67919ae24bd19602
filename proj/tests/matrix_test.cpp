#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace ringcodes;

TEST(Matrix, ShapesAndLiterals) {
  const Ring z20 = Ring::integers_mod(20);
  const Matrix a = Matrix::from_ints(z20, {{1, 2}, {0, -1}});
  EXPECT_EQ(a(1, 1), 19u);
  EXPECT_EQ(transpose(a)(0, 1), 0u);
  EXPECT_THROW(Matrix(z20, 0, 2), ShapeError);
  EXPECT_THROW(Matrix(z20, 1, 2, {1}), ShapeError);
  EXPECT_THROW(Matrix(z20, 1, 1, {20}), InvalidParameter);
  EXPECT_THROW(Matrix::from_ints(z20, {{1, 2}, {3}}), ShapeError);
  const Matrix b = Matrix::from_ints(z20, {{1, 2, 3}});
  EXPECT_THROW(mat_mul(b, b), ShapeError);
  EXPECT_THROW(mat_mul(a, Matrix::identity(Ring::integers_mod(4), 2)), RingMismatch);
  // s > l is fine outside MPC construction
  EXPECT_NO_THROW(Matrix::from_ints(z20, {{1}, {2}, {3}}));
}

TEST(Matrix, ExampleGrams) {
  const Ring z20 = Ring::integers_mod(20);
  const Matrix a = Matrix::from_ints(z20, {{1, 2}, {0, 0}});
  EXPECT_EQ(classify_gram(a), (GramShape{GramKind::Diagonal, {5, 0}}));
  EXPECT_FALSE(is_nonsingular(a));
  const Matrix b = Matrix::from_ints(z20, {{0, 2, 0, 4}, {0, 4, 2, 0}});
  EXPECT_EQ(classify_gram(b), (GramShape{GramKind::AntiDiagonal, {8, 8}}));
  const Ring z25 = Ring::integers_mod(25);
  EXPECT_EQ(classify_gram(Matrix::from_ints(z25, {{1, 7}, {7, 1}})), (GramShape{GramKind::AntiDiagonal, {14, 14}}));
  EXPECT_EQ(classify_gram(Matrix::from_ints(z25, {{1, 2}, {3, 4}})).kind, GramKind::Other);
}

TEST(Matrix, GramTieBreakPrefersDiagonal) {
  const Ring z4 = Ring::integers_mod(4);
  EXPECT_EQ(classify_gram(Matrix::from_ints(z4, {{2, 1, 1, 1}})), (GramShape{GramKind::Diagonal, {3}}));
  EXPECT_EQ(classify_gram(Matrix::from_ints(z4, {{2, 0}, {0, 2}})), (GramShape{GramKind::Diagonal, {0, 0}}));
}

TEST(Matrix, DeterminantAndInverse) {
  const Ring z20 = Ring::integers_mod(20);
  EXPECT_EQ(determinant(Matrix::from_ints(z20, {{1, 2}, {3, 4}})).value(), 18u);
  EXPECT_THROW(determinant(Matrix::from_ints(z20, {{1, 2}})), ShapeError);
  const Matrix a = Matrix::from_ints(z20, {{1, 2}, {3, 5}});  // det = -1
  const Matrix inv = adjugate_inverse(a);
  EXPECT_EQ(a * inv, Matrix::identity(z20, 2));
  EXPECT_THROW(adjugate_inverse(Matrix::from_ints(z20, {{2, 0}, {0, 1}})), NotInvertible);
  EXPECT_EQ(determinant(Matrix::from_ints(z20, {{7}})).value(), 7u);
}

TEST(Matrix, OrthogonalMatrices) {
  const Ring z5 = Ring::integers_mod(5);
  EXPECT_TRUE(is_orthogonal_matrix(Matrix::from_ints(z5, {{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_orthogonal_matrix(Matrix::from_ints(z5, {{1, 2}, {2, 4}})) == false);
  // (3,4),(4,-3): 9+16 = 25 = 0 in Z/5, not orthogonal
  EXPECT_FALSE(is_orthogonal_matrix(Matrix::from_ints(z5, {{3, 4}, {4, 2}})));
  EXPECT_THROW(is_orthogonal_matrix(Matrix::from_ints(z5, {{1, 0, 0}})), ShapeError);
}

TEST(Matrix, FullRank) {
  const Ring z20 = Ring::integers_mod(20);
  EXPECT_FALSE(has_full_rank(Matrix::from_ints(z20, {{1, 2}, {0, 0}})));
  EXPECT_TRUE(has_full_rank(Matrix::from_ints(z20, {{1, 0, 1}, {0, 1, 1}})));
  EXPECT_FALSE(has_full_rank(Matrix::from_ints(z20, {{2, 4}, {1, 2}})));
  // row (10, 0) is killed by 2, so no 1x2 matrix with zero-divisor-only entries is full rank
  EXPECT_FALSE(has_full_rank(Matrix::from_ints(z20, {{10, 4}})));
  EXPECT_TRUE(has_full_rank(Matrix::from_ints(z20, {{4, 5}})));
  Budget tiny{5};
  EXPECT_THROW(has_full_rank(Matrix::from_ints(z20, {{2, 4}, {1, 2}}), tiny), BudgetExceeded);
}

TEST(MatrixProperty, TransposeAndDeterminantAreMultiplicative) {
  support::Gen gen(support::test_seed());
  for (const Ring& r : support::small_rings()) {
    SCOPED_TRACE(r.describe());
    const auto toy = support::toy_of(r);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + gen.below(3);
      const Matrix a = gen.matrix(r, n, n), b = gen.matrix(r, n, n);
      ASSERT_EQ(transpose(a * b), transpose(b) * transpose(a));
      ASSERT_EQ(determinant(a * b).value(), r.mul(determinant(a).value(), determinant(b).value()));
      ASSERT_EQ(determinant(a).value(), oracle::det(toy, support::to_rows(a)));
    }
  }
}

TEST(MatrixProperty, AdjugateInverseIsTwoSided) {
  support::Gen gen(support::test_seed() + 1);
  for (const Ring& r : support::small_rings()) {
    for (int t = 0; t < 40; ++t) {
      const Matrix a = gen.matrix(r, 3, 3);
      if (!is_nonsingular(a)) {
        EXPECT_THROW(adjugate_inverse(a), NotInvertible);
        continue;
      }
      const Matrix inv = adjugate_inverse(a);
      ASSERT_EQ(a * inv, Matrix::identity(r, 3));
      ASSERT_EQ(inv * a, Matrix::identity(r, 3));
    }
  }
}

TEST(MatrixProperty, GramReconstructionAndUnitLambdas) {
  support::Gen gen(support::test_seed() + 2);
  std::size_t structured = 0;
  for (const Ring& r : support::small_rings()) {
    for (int t = 0; t < 3000; ++t) {
      const std::size_t s = 1 + gen.below(3), l = s + gen.below(2);
      const Matrix a = gen.matrix(r, s, l);
      const GramShape g = classify_gram(a);
      if (g.kind == GramKind::Other) continue;
      ++structured;
      const Matrix rebuilt = g.kind == GramKind::Diagonal ? diag_matrix(r, g.lambdas) : adiag_matrix(r, g.lambdas);
      ASSERT_EQ(rebuilt, gram_matrix(a));
      const bool units = std::all_of(g.lambdas.begin(), g.lambdas.end(), [&](Elem e) { return r.is_unit(e); });
      if (units && a.is_square()) {
        ASSERT_TRUE(is_nonsingular(a));
      }
      const GramShape identity_gram{GramKind::Diagonal, std::vector<Elem>(s, r.one())};
      ASSERT_EQ(a.is_square() && is_orthogonal_matrix(a), a.is_square() && g == identity_gram);
    }
  }
  EXPECT_GT(structured, 100u);
}

TEST(MatrixProperty, FullRankMatchesOracle) {
  support::Gen gen(support::test_seed() + 3);
  for (const Ring& r : support::small_rings()) {
    const auto toy = support::toy_of(r);
    for (int t = 0; t < 40; ++t) {
      const std::size_t s = 1 + gen.below(2), l = s + gen.below(2);
      const Matrix a = gen.matrix(r, s, l);
      ASSERT_EQ(has_full_rank(a), oracle::full_rank(toy, support::to_rows(a))) << format_matrix(a);
    }
  }
}
