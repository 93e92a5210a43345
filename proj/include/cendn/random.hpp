// Deterministic random values for property checks. Draws map the raw
// mt19937_64 stream by modulo so output does not depend on the standard
// library's distribution implementations.
#pragma once

#include <cstdint>
#include <random>

#include "cendn/conformal.hpp"
#include "cendn/smith.hpp"
#include "cendn/weyl.hpp"

namespace cendn {

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(gen_() % span);
  }
  bool coin(int num = 1, int den = 2) { return range(0, den - 1) < num; }

  /// Small rational with numerator in [-5, 5] and denominator in [1, 3].
  Rational rational() {
    Rational r{Integer(range(-5, 5)), Integer(range(1, 3))};
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational() {
    Rational r = 0;
    while (r == 0) r = rational();
    return r;
  }

  template <Var X>
  UniPoly<X> poly(int maxDeg) {
    UniPoly<X> f;
    for (int k = 0; k <= maxDeg; ++k)
      if (coin()) f.add_term(k, rational());
    return f;
  }

  BiPoly bipoly(int maxD, int maxV) {
    BiPoly f;
    for (int i = 0; i <= maxD; ++i)
      for (int j = 0; j <= maxV; ++j)
        if (coin(1, 3)) f.add_term({i, j}, rational());
    return f;
  }

  ConformalElement element(std::size_t N, int maxD = 3, int maxV = 3) {
    ConformalElement a(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) a(i, j) = bipoly(maxD, maxV);
    return a;
  }

  /// D-free element with v-degree <= maxV.
  PolyMatrix<Var::v> vmatrix(std::size_t N, int maxV) {
    PolyMatrix<Var::v> m(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = poly<Var::v>(maxV);
    return m;
  }

  WeylElement weyl(int maxP, int maxQ) {
    WeylElement w;
    for (int i = 0; i <= maxP; ++i)
      for (int j = 0; j <= maxQ; ++j)
        if (coin(1, 3)) w.add_term({i, j}, rational());
    return w;
  }

  WeylMatrix weyl_matrix(std::size_t N, int maxP, int maxQ) {
    WeylMatrix m(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = weyl(maxP, maxQ);
    return m;
  }

  /// Unimodular matrix: constant diagonal times a few elementary row
  /// operations with multipliers of degree <= maxDeg.
  PolyMatrix<Var::v> unimodular(std::size_t N, int maxDeg, int steps = 3) {
    std::vector<UniPoly<Var::v>> diag;
    for (std::size_t i = 0; i < N; ++i) diag.emplace_back(nonzero_rational());
    auto m = PolyMatrix<Var::v>::diagonal(diag);
    if (N < 2) return m;
    for (int s = 0; s < steps; ++s) {
      const auto r = static_cast<std::size_t>(range(0, static_cast<long>(N) - 1));
      auto c = static_cast<std::size_t>(range(0, static_cast<long>(N) - 2));
      if (c >= r) ++c;
      const auto f = poly<Var::v>(maxDeg);
      for (std::size_t j = 0; j < N; ++j) m(r, j) += f * m(c, j);
    }
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cendn
