#include <gtest/gtest.h>

#include "cendn/operator.hpp"
#include "cendn/random.hpp"
#include "oracles.hpp"

using namespace cendn;

namespace {

const BiPoly D = BiPoly::D(), v = BiPoly::v();
const WeylElement p = WeylElement::p(), q = WeylElement::q();

ConformalElement one(const BiPoly& f) { return ConformalElement(1, {f}); }
WeylMatrix w1(const WeylElement& w) { return WeylMatrix(1, {w}); }

std::vector<OperatorSample> samples_of(const ConformalElement& a, int upto) {
  std::vector<OperatorSample> s;
  for (int n = 0; n <= upto; ++n) s.push_back({n, symbol(a, n)});
  return s;
}

}  // namespace

TEST(Symbol, Examples) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(symbol(one(v), n), w1(WeylElement::monomial(1, n)));
    EXPECT_EQ(symbol(one(D), n), w1(WeylElement::monomial(0, n - 1, -n)));
  }
  const auto A = curr_embed(2, {1, 2, 0, Rational(1, 3)});
  EXPECT_EQ(symbol(A, 3), A.map([](const BiPoly& f) { return WeylElement(f.coeff_D(0).coeff(0)); })
                              * WeylMatrix::identity(2).scaled(q * q * q));
}

TEST(Symbol, MatchesDefinition) {
  Random rng(31);
  for (int c = 0; c < 20; ++c) {
    const auto a = rng.element(2, 3, 3);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(symbol(a, n), oracle::symbol(a, n));
  }
}

TEST(Act, Examples) {
  Random rng(32);
  const auto b = rng.element(1, 0, 3);
  EXPECT_EQ(act(w1(p), b), times_v(b));
  EXPECT_EQ(act(w1(q), b), b.map([](const BiPoly& f) { return f.d_v(); }));
  EXPECT_EQ(act(w1(WeylElement(1)), b), b);
  const auto bD = rng.element(2, 3, 3);
  EXPECT_EQ(act(WeylMatrix::identity(2), bD), bD);
  EXPECT_THROW(act(w1(p), bD), DimensionMismatch);
}

TEST(Act, ReproducesProducts) {
  Random rng(33);
  for (int c = 0; c < 15; ++c) {
    const auto a = rng.element(2, 2, 2), b = rng.element(2, 2, 2);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(act(symbol(a, n), b), oracle::nproduct(a, n, b));
    const auto x = rng.weyl_matrix(2, 2, 2), y = rng.weyl_matrix(2, 2, 2);
    EXPECT_EQ(act(x * y, b), act(x, act(y, b)));
  }
}

TEST(Composition, RandomPairs) {
  Random rng(34);
  for (int c = 0; c < 8; ++c) {
    const std::size_t N = 1 + static_cast<std::size_t>(c % 2);
    const auto a = rng.element(N, 2, 2), b = rng.element(N, 2, 2);
    EXPECT_TRUE(verify_composition(a, b, 3, 3).all_passed());
  }
  const ConformalElement z(2);
  EXPECT_TRUE(verify_composition(z, z, 2, 2).all_passed());
}

TEST(Composition, CorruptedSymbolFails) {
  Random rng(35);
  const auto a = rng.element(2, 2, 2), b = rng.element(2, 2, 2);
  const SymbolFn bad = [](const ConformalElement& x, int n) {
    WeylMatrix r = symbol(x, n);
    if (n == 1) r += WeylMatrix::identity(x.size());
    return r;
  };
  EXPECT_FALSE(verify_composition(a, b, 3, 3, bad).all_passed());
}

TEST(FitSequence, Examples) {
  const auto seq = fit_differential_sequence(samples_of(one(v), 3));
  ASSERT_EQ(seq.coeffs.size(), 1u);
  EXPECT_EQ(seq.coeffs[0], PolyMatrix<Var::p>(1, {PolyP::x()}));
  EXPECT_EQ(reconstruct(seq), one(v));

  std::vector<OperatorSample> zeros{{0, WeylMatrix(1)}, {1, WeylMatrix(1)}};
  EXPECT_TRUE(fit_differential_sequence(zeros).coeffs.empty());

  std::vector<OperatorSample> bad{{0, w1(1)}, {1, w1(0)}};
  EXPECT_THROW(fit_differential_sequence(bad), NotDifferential);
  std::vector<OperatorSample> few{{0, w1(1)}};
  EXPECT_THROW(fit_differential_sequence(few), InsufficientSamples);
  std::vector<OperatorSample> gap{{0, w1(1)}, {2, w1(q * q)}};
  EXPECT_THROW(fit_differential_sequence(gap), InsufficientSamples);
}

TEST(Reconstruct, Examples) {
  DifferentialSequence seq{{PolyMatrix<Var::p>(1, {PolyP::x()})}};
  EXPECT_EQ(reconstruct(seq), one(v));
  EXPECT_EQ(reconstruct(DifferentialSequence{}, 2), ConformalElement(2));
  EXPECT_THROW(reconstruct(DifferentialSequence{}), std::invalid_argument);
}

TEST(Reconstruct, RoundTrip) {
  Random rng(36);
  for (int c = 0; c < 20; ++c) {
    const std::size_t N = 1 + static_cast<std::size_t>(c % 2);
    const auto a = rng.element(N, 3, 3);
    const auto seq = fit_differential_sequence(samples_of(a, std::max(0, degree_D(a)) + 1));
    EXPECT_EQ(reconstruct(seq, N), a);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(seq.term(n, N), symbol(a, n));
  }
}

TEST(Density, CurrentAlgebra) {
  for (std::size_t N : {1u, 2u}) {
    std::vector<ConformalElement> gens;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) gens.push_back(ConformalElement::unit(N, i, j));
    EXPECT_EQ(orbit_density_check(gens, 3, 3).verdict, Density::Dense);
  }
}

TEST(Density, DerivativeAloneIsNotDense) {
  const auto d = orbit_density_check({ConformalElement::identity(2).scaled(D)}, 4, 3);
  EXPECT_EQ(d.verdict, Density::Unknown);
}

TEST(Density, ShiftedIdeal) {
  EXPECT_EQ(orbit_density_check({one(v - D)}, 3, 3).verdict, Density::Dense);
  EXPECT_THROW(orbit_density_check({one(v)}, -1, 2), std::invalid_argument);
}
