// Operators attached to conformal elements: the symbol a(n) in M_N(W), the
// action of M_N(W) on M_N(k[D, v]), differential sequences and reconstruction.
#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "cendn/conformal.hpp"
#include "cendn/errors.hpp"
#include "cendn/linalg.hpp"
#include "cendn/report.hpp"
#include "cendn/weyl.hpp"

namespace cendn {

/// Coefficient matrices A_s(v) in a = sum_s (-D)^(s) A_s(v), so
/// A_s = (-1)^s s! [D^s] a.
inline std::vector<PolyMatrix<Var::v>> divided_coefficients(const ConformalElement& a) {
  const int top = std::max(0, degree_D(a));
  std::vector<PolyMatrix<Var::v>> out;
  for (int s = 0; s <= top; ++s) {
    Rational f = Rational(factorial(s));
    if (s % 2 == 1) f = -f;
    out.push_back(a.map([&](const BiPoly& e) { return e.coeff_D(s) * f; }));
  }
  return out;
}

/// a(n) = sum_s C(n,s) A_s(p) q^(n-s).
inline WeylMatrix symbol(const ConformalElement& a, int n) {
  if (n < 0) throw std::invalid_argument("symbol index must be non-negative");
  const auto A = divided_coefficients(a);
  WeylMatrix r(a.size());
  for (int s = 0; s <= n && s < static_cast<int>(A.size()); ++s) {
    const Rational c = Rational(binomial(n, s));
    const WeylMatrix term = weyl_matrix(A[s].map([](const PolyV& f) {
      return f.rename<Var::p>();
    }));
    r += times_q(term, n - s) * c;
  }
  return r;
}

using SymbolFn = std::function<WeylMatrix(const ConformalElement&, int)>;

namespace detail {

// p^i q^j applied to one entry: D^s v^beta maps to
// sum_t C(j,t) s!/(s-t)! D^(s-t) v^i d_v^(j-t) v^beta.
inline void act_entry(BiPoly& out, const WeylElement& w, const BiPoly& b) {
  for (const auto& [wm, wc] : w.terms()) {
    const int i = wm.first, j = wm.second;
    for (const auto& [bm, bc] : b.terms()) {
      const int s = bm.first, beta = bm.second;
      for (int t = 0; t <= j && t <= s; ++t) {
        const int k = j - t;
        if (k > beta) continue;
        Integer c = binomial(j, t) * falling(s, t) * falling(beta, k);
        out.add_term({s - t, i + beta - k}, wc * bc * Rational(c));
      }
    }
  }
}

}  // namespace detail

/// Action of M_N(W) on M_N(k[D, v]): p is multiplication by v, q acts as
/// d_v + d_D, matrices multiply on the left.
inline ConformalElement act(const WeylMatrix& w, const ConformalElement& b) {
  if (w.size() != b.size())
    throw DimensionMismatch("act: operator and element sizes differ");
  const std::size_t N = b.size();
  ConformalElement r(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (w(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j)
        if (!b(k, j).is_zero()) detail::act_entry(r(i, j), w(i, k), b(k, j));
    }
  return r;
}

/// Checks for n <= maxn, m <= maxm
///   a(n) b(m) = sum_s C(n,s) (a o_(n-s) b)(m+s)              "composition"
///   (a o_n b)(m) = sum_s (-1)^s C(n,s) a(n-s) b(m+s)          "coefficient"
inline CheckReport verify_composition(const ConformalElement& a, const ConformalElement& b,
                                      int maxn, int maxm, const SymbolFn& sym = symbol) {
  a.check_same(b);
  CheckReport rep;
  for (int n = 0; n <= maxn; ++n)
    for (int m = 0; m <= maxm; ++m) {
      const std::string label = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
      WeylMatrix lhs = sym(a, n) * sym(b, m);
      WeylMatrix rhs(a.size());
      for (int s = 0; s <= n; ++s)
        rhs += sym(nproduct(a, n - s, b), m + s) * Rational(binomial(n, s));
      rep.add("composition", label, lhs == rhs);

      WeylMatrix lhs2 = sym(nproduct(a, n, b), m);
      WeylMatrix rhs2(a.size());
      for (int s = 0; s <= n; ++s) {
        WeylMatrix t = (sym(a, n - s) * sym(b, m + s)) * Rational(binomial(n, s));
        if (s % 2 == 0)
          rhs2 += t;
        else
          rhs2 -= t;
      }
      rep.add("coefficient", label, lhs2 == rhs2);
    }
  return rep;
}

/// Coefficients A_0..A_m of a_n = sum_s C(n,s) A_s q^(n-s).
struct DifferentialSequence {
  std::vector<PolyMatrix<Var::p>> coeffs;

  /// a_n.
  WeylMatrix term(int n, std::size_t N) const {
    WeylMatrix r(N);
    for (int s = 0; s <= n && s < static_cast<int>(coeffs.size()); ++s)
      r += times_q(weyl_matrix(coeffs[s]), n - s) * Rational(binomial(n, s));
    return r;
  }
};

struct OperatorSample {
  int n = 0;
  WeylMatrix op;
};

/// Recovers the coefficients from consecutive samples a_0..a_M. The
/// stabilization index m is the last sample with q-valuation 0; a sample past
/// it must be present.
inline DifferentialSequence fit_differential_sequence(std::vector<OperatorSample> samples) {
  if (samples.empty()) throw InsufficientSamples("no samples");
  std::sort(samples.begin(), samples.end(),
            [](const OperatorSample& x, const OperatorSample& y) { return x.n < y.n; });
  const std::size_t N = samples.front().op.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].n != static_cast<int>(i))
      throw InsufficientSamples("sample indices must be consecutive from 0");
    if (samples[i].op.size() != N) throw DimensionMismatch("samples differ in size");
  }
  const int M = static_cast<int>(samples.size()) - 1;

  bool all_zero = true;
  for (const auto& s : samples)
    if (!s.op.is_zero()) all_zero = false;
  if (all_zero) return {};

  int m = -1;
  for (int n = 0; n <= M; ++n)
    if (q_valuation(samples[n].op) == 0) m = n;
  if (m < 0) throw NotDifferential("no sample has a q-free part");
  if (M < m + 1) throw InsufficientSamples("no sample beyond the stabilization index");

  const WeylMatrix& am = samples[m].op;
  if (degree_q(am) > m) throw NotDifferential("q-degree of a_m exceeds m");
  DifferentialSequence seq;
  for (int s = 0; s <= m; ++s)
    seq.coeffs.push_back(coeff_q(am, m - s) * (Rational(1) / Rational(binomial(m, s))));
  while (!seq.coeffs.empty() && seq.coeffs.back().is_zero()) seq.coeffs.pop_back();

  for (int n = 0; n <= M; ++n) {
    if (seq.term(n, N) != samples[n].op)
      throw NotDifferential("sample " + std::to_string(n) + " does not match the sequence");
    if (n > 0 && weyl_dq(samples[n].op) != samples[n - 1].op * Rational(n))
      throw NotDifferential("d_q a_" + std::to_string(n) + " != " + std::to_string(n) +
                            " a_" + std::to_string(n - 1));
  }
  return seq;
}

/// a = sum_s (-D)^(s) A_s(v).
inline ConformalElement reconstruct(const DifferentialSequence& seq, std::size_t N) {
  ConformalElement a(N);
  for (std::size_t s = 0; s < seq.coeffs.size(); ++s) {
    if (seq.coeffs[s].size() != N) throw DimensionMismatch("coefficient size mismatch");
    Rational f = Rational(1) / Rational(factorial(static_cast<int>(s)));
    if (s % 2 == 1) f = -f;
    a += seq.coeffs[s].map([&](const PolyP& g) {
      return BiPoly(g.rename<Var::v>()).times_D(static_cast<int>(s)) * f;
    });
  }
  return a;
}

inline ConformalElement reconstruct(const DifferentialSequence& seq) {
  if (seq.coeffs.empty()) throw std::invalid_argument("empty sequence needs an explicit size");
  return reconstruct(seq, seq.coeffs.front().size());
}

enum class Density { Dense, Unknown };

struct DensityResult {
  Density verdict = Density::Unknown;
  int shift = 0;         ///< maximal p-degree of the operator set
  int certified = -1;    ///< degrees 0..certified of every p^j e_l are covered
  std::size_t operators = 0;
};

/// Bounded density check. The operator set is p^i w with i <= degBound and
/// w a word of length <= wordLength in the symbols a(n), n <= nBound. Every
/// operator is applied to each constant basis vector e_k of k[p]^N (q acts
/// as d/dp), and the span of the images must contain all p^j e_l with
/// j <= degBound - shift.
inline DensityResult orbit_density_check(const std::vector<ConformalElement>& generators,
                                         int degBound, int nBound, int wordLength = 2) {
  if (degBound < 0 || nBound < 0) throw std::invalid_argument("bounds must be non-negative");
  DensityResult res;
  if (generators.empty()) return res;
  const std::size_t N = generators.front().size();
  for (const auto& g : generators) g.check_same(generators.front());

  // Columns of w applied to constants: the q-free parts.
  std::vector<PolyMatrix<Var::p>> ops;
  std::vector<WeylMatrix> letters;
  for (const auto& g : generators)
    for (int n = 0; n <= nBound; ++n) {
      WeylMatrix s = symbol(g, n);
      if (!s.is_zero()) letters.push_back(std::move(s));
    }
  std::vector<WeylMatrix> words = letters;
  std::vector<WeylMatrix> frontier = letters;
  for (int len = 2; len <= wordLength; ++len) {
    std::vector<WeylMatrix> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        WeylMatrix x = w * l;
        if (!x.is_zero()) next.push_back(std::move(x));
      }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& w : words) {
    PolyMatrix<Var::p> c = coeff_q(w, 0);
    if (c.is_zero()) continue;
    for (const auto& e : c.data()) res.shift = std::max(res.shift, e.degree());
    ops.push_back(std::move(c));
  }
  res.operators = ops.size() * static_cast<std::size_t>(degBound + 1);

  const int target = degBound - res.shift;
  if (target < 0) return res;
  const int top = degBound + res.shift;
  const std::size_t dim = N * static_cast<std::size_t>(top + 1);
  auto coord = [&](std::size_t l, int j) { return l * static_cast<std::size_t>(top + 1) + j; };

  int certified = target;
  for (std::size_t k = 0; k < N; ++k) {
    RationalRowSpace span(dim);
    for (const auto& c : ops)
      for (int i = 0; i <= degBound; ++i) {
        RationalVector img(dim, Rational(0));
        bool nonzero = false;
        for (std::size_t l = 0; l < N; ++l)
          for (const auto& [d, coef] : c(l, k).terms()) {
            img[coord(l, d + i)] += coef;
            nonzero = true;
          }
        if (nonzero) span.insert(std::move(img));
      }
    int ok = -1;
    for (int j = 0; j <= target; ++j) {
      bool all = true;
      for (std::size_t l = 0; l < N && all; ++l) {
        RationalVector unit(dim, Rational(0));
        unit[coord(l, j)] = 1;
        all = span.contains(std::move(unit));
      }
      if (!all) break;
      ok = j;
    }
    certified = std::min(certified, ok);
  }
  res.certified = certified;
  if (certified == target) res.verdict = Density::Dense;
  return res;
}

}  // namespace cendn
