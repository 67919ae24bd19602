#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace ringcodes;

namespace {

RingElement el(const Ring& r, std::int64_t v) { return {r, r.from_int(v)}; }

std::string hypothesis_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const HypothesisViolation& e) {
    return e.hypothesis();
  }
  return "";
}

// delta_i recomputed with the oracle: span of the first i rows, then a weight scan.
std::vector<std::size_t> oracle_deltas(const Matrix& a) {
  const auto toy = oracle::ToyRing::zn(static_cast<std::uint32_t>(a.ring().residue_modulus()));
  std::vector<std::size_t> out;
  std::vector<oracle::Vec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rows.emplace_back(a.row(i).begin(), a.row(i).end());
    out.push_back(oracle::min_weight(oracle::span(toy, a.cols(), rows)));
  }
  return out;
}

}  // namespace

TEST(Constructions, Diag1) {
  const Ring z25 = Ring::integers_mod(25);
  const CertifiedMatrix cm = diag1_matrix(z25, el(z25, 1));
  EXPECT_EQ(format_matrix(cm.matrix), "[[1,1,1],[24,0,1]]");
  EXPECT_EQ(cm.gram, (GramShape{GramKind::Diagonal, {3, 2}}));
  EXPECT_EQ(cm.deltas, (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(oracle_deltas(cm.matrix), cm.deltas);
  EXPECT_EQ(diag1_matrix(z25).matrix, cm.matrix);  // u defaults to 1
  EXPECT_EQ(cm.hypotheses, (std::vector<std::string>{"2-not-zero-divisor", "u-not-zero-divisor"}));

  const Ring z20 = Ring::integers_mod(20), z9 = Ring::integers_mod(9);
  EXPECT_EQ(hypothesis_of([&] { diag1_matrix(z20, el(z20, 1)); }), "2-not-zero-divisor");
  EXPECT_EQ(hypothesis_of([&] { diag1_matrix(z9, el(z9, 3)); }), "u-not-zero-divisor");
  try {
    diag1_matrix(z20);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("2 is a zero divisor"), std::string::npos);
  }
}

TEST(Constructions, Adiag1) {
  const Ring z25 = Ring::integers_mod(25);
  const CertifiedMatrix a = adiag1_matrix_a(z25, el(z25, 7));
  EXPECT_EQ(a.gram, (GramShape{GramKind::AntiDiagonal, {24, 24}}));
  EXPECT_EQ(a.deltas, (std::vector<std::size_t>{2, 2}));
  const CertifiedMatrix b = adiag1_matrix_b(z25, el(z25, 7));
  EXPECT_EQ(b.gram, (GramShape{GramKind::AntiDiagonal, {21, 21}}));
  EXPECT_EQ(b.deltas, (std::vector<std::size_t>{4, 3}));
  EXPECT_EQ(oracle_deltas(b.matrix), b.deltas);
  EXPECT_EQ(adiag1_matrix_a(z25).matrix, a.matrix);  // smallest root of -1 is 7

  const Ring z20 = Ring::integers_mod(20);
  EXPECT_EQ(hypothesis_of([&] { adiag1_matrix_a(z20, el(z20, 3)); }), "u-squared-minus-one");
  EXPECT_EQ(hypothesis_of([&] { adiag1_matrix_a(z20); }), "u-squared-minus-one");
  EXPECT_THROW(adiag1_matrix_a(z25, el(Ring::integers_mod(13), 5)), RingMismatch);
}

TEST(Constructions, Adiag3) {
  const Ring z25 = Ring::integers_mod(25), z13 = Ring::integers_mod(13), z20 = Ring::integers_mod(20);
  EXPECT_EQ(adiag3_matrix(z25, el(z25, 7)).gram, (GramShape{GramKind::AntiDiagonal, {14, 14}}));
  const CertifiedMatrix c13 = adiag3_matrix(z13, el(z13, 5));
  EXPECT_EQ(c13.gram, (GramShape{GramKind::AntiDiagonal, {10, 10}}));
  EXPECT_EQ(c13.deltas, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(c13.hypotheses, (std::vector<std::string>{"2-unit", "u-squared-minus-one"}));
  for (std::int64_t u = 0; u < 20; ++u) EXPECT_EQ(hypothesis_of([&] { adiag3_matrix(z20, el(z20, u)); }), "2-unit");
}

TEST(Constructions, BlockMatrices) {
  const Ring z25 = Ring::integers_mod(25);
  const RingElement u = el(z25, 7);
  EXPECT_EQ(block_adiag_matrix(z25, u, 2).matrix, adiag3_matrix(z25, u).matrix);
  const CertifiedMatrix b3 = block_adiag_matrix(z25, u, 3);
  EXPECT_EQ(format_matrix(b3.matrix), "[[1,0,7],[0,1,0],[7,0,1]]");
  EXPECT_EQ(b3.gram, (GramShape{GramKind::AntiDiagonal, {14, 1, 14}}));
  EXPECT_EQ(b3.deltas, (std::vector<std::size_t>{2, 1, 1}));
  const CertifiedMatrix b4 = block_adiag_matrix(z25, u, 4);
  EXPECT_EQ(b4.gram, (GramShape{GramKind::AntiDiagonal, {14, 14, 14, 14}}));
  EXPECT_EQ(b4.deltas, (std::vector<std::size_t>{2, 2, 1, 1}));
  EXPECT_EQ(oracle_deltas(b4.matrix), b4.deltas);
  const Ring z13 = Ring::integers_mod(13);
  const CertifiedMatrix b5 = block_adiag_matrix(z13, el(z13, 5), 5);
  EXPECT_EQ(b5.deltas, (std::vector<std::size_t>{2, 2, 1, 1, 1}));
  EXPECT_EQ(oracle_deltas(b5.matrix), b5.deltas);
  EXPECT_THROW(block_adiag_matrix(z25, u, 1), InvalidParameter);
}

TEST(Constructions, OddBlockBoundReadings) {
  const std::vector<std::size_t> d{5, 4, 3};
  // literal reading skips d_2; the product bound keeps it
  EXPECT_EQ(block_adiag_bound_skipping_middle(d), 3u);
  const std::vector<std::size_t> d2{5, 1, 3};
  EXPECT_EQ(block_adiag_bound_skipping_middle(d2), 3u);
  const Ring z13 = Ring::integers_mod(13);
  const CertifiedMatrix b3 = block_adiag_matrix(z13, el(z13, 5), 3);
  const LinearCode c1 = LinearCode::span(z13, 2, {{1, 5}});
  const LinearCode c2 = LinearCode::span(z13, 2, {{1, 0}});
  const MPCSpec spec({c1, c2, c1}, b3.matrix);
  // d = (2, 1, 2), deltas = (2, 1, 1): products (4, 1, 2)
  EXPECT_EQ(min_distance_lower_bound(spec), 1u);
  // the skipping form claims 2 here, but a weight-1 word exists
  EXPECT_EQ(block_adiag_bound_skipping_middle(std::vector<std::size_t>{2, 1, 2}), 2u);
  EXPECT_EQ(min_distance(build_mpc(spec)), 1u);
  const std::vector<std::size_t> even{3, 4, 5, 1};
  EXPECT_EQ(block_adiag_bound_skipping_middle(even), 1u);
}

TEST(Constructions, PrimeSquareCodes) {
  const PrimeSquareCodes p5 = prime_square_codes(5);
  EXPECT_EQ(p5.ring, Ring::integers_mod(25));
  EXPECT_EQ(p5.c1.length(), 5u);
  EXPECT_EQ(min_distance(p5.c1), 5u);
  EXPECT_EQ(min_distance(p5.c2), 5u);
  const PrimeSquareCodes p13 = prime_square_codes(13);
  EXPECT_EQ(p13.c1.size(), 169u);
  EXPECT_EQ(p13.c2.size(), 13u);
  EXPECT_THROW(prime_square_codes(3), InvalidParameter);
  EXPECT_THROW(prime_square_codes(9), InvalidParameter);
  EXPECT_THROW(prime_square_codes(1), InvalidParameter);
}

// ---------------------------------------------------------------------------
// Corollary pipelines on random inputs that meet their hypotheses

TEST(ConstructionsProperty, Diag1Pipeline) {
  support::Gen gen(support::test_seed());
  for (const Ring& r : {Ring::integers_mod(9), Ring::integers_mod(25), Ring::integers_mod(13)}) {
    const CertifiedMatrix cm = diag1_matrix(r);
    for (int t = 0; t < 15; ++t) {
      const LinearCode c1 = gen.self_orthogonal_code(r, 2), c2 = gen.self_orthogonal_code(r, 2);
      const MPCSpec spec({c1, c2}, cm.matrix);
      ASSERT_TRUE(check_conditions(spec).concludes(Property::SelfOrthogonal));
      const LinearCode mpc = build_mpc(spec);
      ASSERT_TRUE(is_self_orthogonal(mpc));
      if (c1.is_zero() || c2.is_zero()) continue;
      ASSERT_GE(min_distance(mpc), std::min(3 * min_distance(c1), 2 * min_distance(c2)));
    }
  }
}

TEST(ConstructionsProperty, Adiag1Pipelines) {
  support::Gen gen(support::test_seed() + 1);
  std::size_t checked = 0;
  for (const Ring& r : {Ring::integers_mod(25), Ring::integers_mod(13)}) {
    const CertifiedMatrix a = adiag1_matrix_a(r), b = adiag1_matrix_b(r);
    for (int t = 0; t < 60; ++t) {
      const LinearCode c2 = gen.code(r, 2, 1);
      const LinearCode c1 = gen.subcode(dual_bruteforce(c2), 1);  // C1 in C2^perp, hence C2 in C1^perp
      if (c1.is_zero() || c2.is_zero()) continue;
      const std::size_t d1 = min_distance(c1), d2 = min_distance(c2);
      const MPCSpec sa({c1, c2}, a.matrix), sb({c1, c2}, b.matrix);
      ASSERT_TRUE(check_conditions(sa).concludes(Property::SelfOrthogonal, "thm-self-orth-2"));
      ASSERT_TRUE(check_conditions(sb).concludes(Property::SelfOrthogonal, "thm-self-orth-2"));
      const LinearCode ma = build_mpc(sa), mb = build_mpc(sb);
      ASSERT_TRUE(is_self_orthogonal(ma));
      ASSERT_TRUE(is_self_orthogonal(mb));
      ASSERT_GE(min_distance(ma), std::min(2 * d1, 2 * d2));
      ASSERT_GE(min_distance(mb), std::min(4 * d1, 3 * d2));
      ++checked;
    }
  }
  EXPECT_GT(checked, 10u);
}

TEST(ConstructionsProperty, Adiag3Pipeline) {
  support::Gen gen(support::test_seed() + 2);
  std::size_t checked = 0;
  for (const Ring& r : {Ring::integers_mod(25), Ring::integers_mod(13), Ring::integers_mod(5)}) {
    const CertifiedMatrix a = adiag3_matrix(r);
    for (int t = 0; t < 10; ++t) {
      const LinearCode c1 = gen.code(r, 2, 1);
      const LinearCode c2 = dual_bruteforce(c1);  // C1 = C2^perp and C2 = C1^perp
      if (!(dual_bruteforce(c2) == c1) || c1.is_zero() || c2.is_zero()) continue;
      const MPCSpec spec({c1, c2}, a.matrix);
      ASSERT_TRUE(check_conditions(spec).concludes(Property::SelfDual, "thm-self-dual"));
      const LinearCode mpc = build_mpc(spec);
      ASSERT_TRUE(is_self_dual(mpc));
      ASSERT_GE(min_distance(mpc), std::min(2 * min_distance(c1), min_distance(c2)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 10u);
}
