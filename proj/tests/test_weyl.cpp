#include <gtest/gtest.h>

#include "cendn/hseq.hpp"
#include "cendn/random.hpp"
#include "cendn/weyl.hpp"
#include "oracles.hpp"

using namespace cendn;

namespace {

const WeylElement p = WeylElement::p(), q = WeylElement::q();

WeylElement mono(int i, int j, Rational c = 1) { return WeylElement::monomial(i, j, c); }

}  // namespace

TEST(Weyl, DefiningRelation) {
  EXPECT_EQ(q * p, p * q + WeylElement(1));
  EXPECT_EQ(q * q * p, mono(1, 2) + mono(0, 1, 2));
  EXPECT_EQ(q * p - p * q, WeylElement(1));
  Random rng(1);
  const WeylElement a = rng.weyl(3, 3);
  EXPECT_EQ(WeylElement(1) * a, a);
  EXPECT_EQ(a * WeylElement(1), a);
}

TEST(Weyl, MatchesSingleSwapOracle) {
  Random rng(2);
  oracle::SlowWeyl slow;
  for (int c = 0; c < 40; ++c) {
    const WeylElement a = rng.weyl(4, 4), b = rng.weyl(4, 4);
    EXPECT_EQ(a * b, slow.multiply(a, b)) << "case " << c;
  }
}

TEST(Weyl, Derivations) {
  EXPECT_EQ(weyl_dq(q * q * q), mono(0, 2, 3));
  EXPECT_EQ(weyl_dq(p * q), p);
  EXPECT_EQ(p * q * p - p * p * q, p);  // [pq, p] = p
  EXPECT_EQ(weyl_dp(mono(2, 1)), mono(1, 1, 2));
}

TEST(Weyl, Valuation) {
  EXPECT_EQ(mono(3, 2).q_valuation(), 2);
  EXPECT_EQ((q * p).q_valuation(), 0);
  EXPECT_EQ((mono(1, 2) + mono(2, 1) + WeylElement(3)).q_truncate(1), WeylElement(3));
  EXPECT_FALSE(q_valuation(WeylMatrix(2)).has_value());
  EXPECT_EQ(q_valuation(WeylMatrix::identity(2).scaled(q * q)), 2);
}

TEST(HSequences, SmallCases) {
  const PolyP h = PolyP::x();
  const auto s = h_sequences(h, 3);
  ASSERT_EQ(s.lower.size(), 4u);
  EXPECT_EQ(s.lower[0], PolyP(1));
  EXPECT_EQ(s.upper[0], PolyP(1));
  EXPECT_EQ(s.lower[1], -h);
  EXPECT_EQ(s.upper[1], h);
  EXPECT_EQ(s.lower[2], h * h - PolyP(1));
  EXPECT_TRUE(verify_h_identities(h, 10).all_passed());
  EXPECT_TRUE(verify_h_identities(PolyP(), 5).all_passed());
}

TEST(HSequences, MatchWeylPowers) {
  Random rng(5);
  for (int c = 0; c < 10; ++c) {
    const PolyP h = rng.poly<Var::p>(3);
    const auto s = h_sequences(h, 8);
    WeylElement lo(1), up(1);
    for (int n = 0; n <= 8; ++n) {
      EXPECT_EQ(lo.coeff_q(0), s.lower[n]);
      EXPECT_EQ(up.coeff_q(0), s.upper[n]);
      lo = lo * (q - WeylElement(h));
      up = up * (q + WeylElement(h));
    }
  }
}

TEST(HSequences, FullExpansionOfShiftedPower) {
  // (q - h)^n = sum_i C(n, i) h_(i) q^(n - i)
  Random rng(6);
  const PolyP h = rng.poly<Var::p>(2);
  const auto s = h_sequences(h, 6);
  for (int n = 0; n <= 6; ++n) {
    WeylElement rhs;
    for (int i = 0; i <= n; ++i)
      rhs += WeylElement(s.lower[i]).times_q(n - i) * Rational(binomial(n, i));
    EXPECT_EQ(shifted_q_power(h, -1, n), rhs);
    EXPECT_EQ(shifted_q_power(h, -1, n), weyl_pow(q - WeylElement(h), n));
  }
}

TEST(SplitByShift, Examples) {
  const WeylElement a = (q - p) * (q - p);
  EXPECT_EQ(split_by_shift(a).constant, PolyP::x() * PolyP::x() - PolyP(1));
  const auto sq = split_by_shift(q);
  EXPECT_EQ(sq.stem, WeylElement(1));
  EXPECT_TRUE(sq.constant.is_zero());
  EXPECT_EQ(split_by_shift(q + p).constant, PolyP::x());
  Random rng(8);
  const WeylElement r = rng.weyl(3, 3);
  const auto sr = split_by_shift(r);
  EXPECT_EQ(sr.stem * q + WeylElement(sr.constant), r);
}

TEST(Rebase, Examples) {
  Random rng(9);
  std::vector<PolyMatrix<Var::p>> A{PolyMatrix<Var::p>::identity(2), PolyMatrix<Var::p>(2)};
  A[1](0, 1) = PolyP::x();
  EXPECT_EQ(rebase_coefficients(A, PolyP()), A);
  const PolyP h = rng.poly<Var::p>(2);
  const auto B = rebase_coefficients(A, h);
  ASSERT_GE(B.size(), 2u);
  EXPECT_EQ(B[0], A[0]);
  EXPECT_EQ(B[1], A[1] - A[0].scaled(h));
  EXPECT_EQ(unrebase_coefficients(B, h), A);
}
