#include <gtest/gtest.h>

#include "cendn/conformal.hpp"
#include "cendn/random.hpp"
#include "oracles.hpp"

using namespace cendn;

namespace {

const BiPoly D = BiPoly::D(), v = BiPoly::v();

ConformalElement one(const BiPoly& f) { return ConformalElement(1, {f}); }

ConformalElement shifted_product(const ConformalElement& a, int n, const ConformalElement& b) {
  ConformalElement r = nproduct(a, n, b);
  if (!a.is_zero() && !b.is_zero()) r += ConformalElement::identity(a.size());
  return r;
}

}  // namespace

TEST(NProduct, Examples) {
  EXPECT_EQ(nproduct(one(v), 1, one(v)), one(v));
  EXPECT_EQ(nproduct(one(D), 1, one(v)), one(-v));
  EXPECT_EQ(nproduct(one(1), 1, one(D * v)), one(D + v));
  EXPECT_EQ(nproduct(one(v * v), 3, one(v * v)), one(0));
}

TEST(NProduct, DFreeIsMatrixTimesDerivative) {
  Random rng(21);
  for (int c = 0; c < 10; ++c) {
    const auto A = lift_second(rng.vmatrix(2, 3)), B = lift_second(rng.vmatrix(2, 3));
    for (int n = 0; n <= 4; ++n)
      EXPECT_EQ(nproduct(A, n, B), A * B.map([n](const BiPoly& f) { return f.d_v(n); }));
  }
}

TEST(NProduct, MatchesSesquilinearRecursion) {
  Random rng(22);
  for (int c = 0; c < 30; ++c) {
    const std::size_t N = 1 + static_cast<std::size_t>(c % 3);
    const auto a = rng.element(N, 3, 3), b = rng.element(N, 3, 3);
    for (int n = 0; n <= 6; ++n) {
      ASSERT_EQ(nproduct(a, n, b), oracle::nproduct(a, n, b)) << "case " << c << " n=" << n;
      ASSERT_EQ(nproduct_circ(a, n, b), oracle::nproduct_circ(a, n, b));
    }
  }
}

TEST(NProduct, SizeMismatch) {
  EXPECT_THROW(nproduct(ConformalElement(1), 0, ConformalElement(2)), DimensionMismatch);
}

TEST(NProductCirc, Examples) {
  EXPECT_EQ(nproduct_circ(one(v * v), 1, one(1)), one(v * BiPoly(2) + D * BiPoly(2)));
  EXPECT_EQ(nproduct_circ(one(1), 0, one(v)), one(v));
  Random rng(23);
  const auto a = lift_second(rng.vmatrix(2, 3)), b = lift_second(rng.vmatrix(2, 3));
  EXPECT_TRUE(nproduct_circ(a, std::max(0, degree_v(a)) + 1, b).is_zero());
  // with D on the right the sesquilinear terms survive
  EXPECT_EQ(nproduct_circ(one(1), 1, one(D)), one(1));
}

TEST(Phi, Substitution) {
  EXPECT_EQ(phi(one(v)), one(v + D));
  EXPECT_EQ(phi_inv(one(v)), one(v - D));
  EXPECT_EQ(phi(one(D)), one(D));
  EXPECT_EQ(phi(one(v * v)), one(v * v + D * v * BiPoly(2) + D * D));
}

TEST(Phi, TransportsProducts) {
  Random rng(24);
  for (int c = 0; c < 20; ++c) {
    const auto a = rng.element(2, 3, 3), b = rng.element(2, 3, 3);
    EXPECT_EQ(phi(phi_inv(a)), a);
    for (int n = 0; n <= 4; ++n)
      EXPECT_EQ(phi(nproduct(a, n, b)), nproduct_circ(phi(a), n, phi(b)));
  }
}

TEST(Locality, Examples) {
  for (int k = 0; k <= 3; ++k)
    for (int m = 0; m <= 3; ++m)
      EXPECT_EQ(locality(one(BiPoly::monomial(0, k)), one(BiPoly::monomial(0, m))), m + 1);
  EXPECT_EQ(locality(one(v), one(3)), 1);
  EXPECT_EQ(locality(ConformalElement::unit(2, 0, 0), ConformalElement::unit(2, 1, 1)), 0);
  EXPECT_EQ(locality(one(0), one(v)), 0);
  // 1 o_1 D = 1, so a D-power on the right raises locality past deg_v(b) + 1
  EXPECT_EQ(nproduct(one(1), 1, one(D)), one(1));
  EXPECT_EQ(locality(one(1), one(D)), 2);
}

TEST(Locality, IsExactAndWithinBound) {
  Random rng(25);
  for (int c = 0; c < 40; ++c) {
    const auto a = rng.element(2, 2, 2), b = rng.element(2, 2, 2);
    const int L = locality(a, b);
    if (L > 0) EXPECT_FALSE(nproduct(a, L - 1, b).is_zero());
    for (int n = L; n <= L + 4; ++n) EXPECT_TRUE(nproduct(a, n, b).is_zero());
    if (!a.is_zero() && !b.is_zero())
      EXPECT_LE(L, std::max(0, degree_D(a)) + std::max(0, degree_D(b)) +
                       std::max(0, degree_v(b)) + 1);
  }
}

TEST(Bracket, Virasoro) {
  const auto L = one(-v);
  EXPECT_EQ(bracket(L, 0, L), times_D(L) * Rational(-1));
  EXPECT_EQ(bracket(L, 1, L), L * Rational(-2));
  for (int n = 2; n <= 5; ++n) EXPECT_TRUE(bracket(L, n, L).is_zero());
}

TEST(Bracket, VanishesBeyondLocality) {
  Random rng(26);
  const auto a = rng.element(2, 1, 2);
  const int L = locality(a, a);
  EXPECT_TRUE(bracket(a, L, a).is_zero());
  EXPECT_TRUE(bracket(a, L + 2, a).is_zero());
}

TEST(Identities, RandomSamples) {
  Random rng(27);
  for (int c = 0; c < 6; ++c) {
    const std::size_t N = 1 + static_cast<std::size_t>(c % 2);
    const auto a = rng.element(N, 2, 2), b = rng.element(N, 2, 2), e = rng.element(N, 2, 2);
    EXPECT_TRUE(check_conformal_axioms(a, b, 5).all_passed());
    EXPECT_TRUE(check_associativity(a, b, e, 3).all_passed());
    EXPECT_TRUE(check_v_relations(a, b, 4).all_passed());
    const auto a1 = rng.element(N, 1, 1), b1 = rng.element(N, 1, 1), e1 = rng.element(N, 1, 1);
    EXPECT_TRUE(check_lie(a1, b1, e1, 2).all_passed());
  }
}

TEST(Identities, ZeroIsVacuous) {
  const ConformalElement z(2);
  EXPECT_TRUE(check_associativity(z, z, z, 4).all_passed());
}

TEST(Identities, CorruptedProductFails) {
  Random rng(28);
  const auto a = rng.element(2, 2, 2), b = rng.element(2, 2, 2), e = rng.element(2, 2, 2);
  EXPECT_FALSE(check_associativity(a, b, e, 3, shifted_product).all_passed());
  EXPECT_FALSE(check_conformal_axioms(a, b, 4, shifted_product).all_passed());
}

TEST(Sigma, LiteralSeries) {
  EXPECT_EQ(sigma(one(v)), one(v - D));
  ConformalElement A(2);
  A(0, 1) = BiPoly(3);
  A(1, 0) = BiPoly(Rational(1, 2));
  EXPECT_EQ(sigma(A), A.transpose());
  // the literal series is not an involution once v appears
  EXPECT_EQ(sigma(sigma(one(v))), one(v - D * BiPoly(2)));
}

TEST(Sigma, AntiInvolution) {
  EXPECT_EQ(anti_involution(one(v)), one(D - v));
  Random rng(29);
  for (int c = 0; c < 10; ++c) {
    const auto a = rng.element(2, 2, 2), b = rng.element(2, 2, 2);
    EXPECT_TRUE(check_anti_involution(a, b, 3).all_passed()) << "case " << c;
  }
}

TEST(Embedding, CurrentAndScalars) {
  const auto c = curr_embed(2, {1, 2, 3, 4});
  EXPECT_EQ(c(1, 0), BiPoly(3));
  EXPECT_THROW(curr_embed(2, {1, 2, 3}), DimensionMismatch);
  EXPECT_EQ(scalar_element(2, v), ConformalElement::identity(2).scaled(v));
}
