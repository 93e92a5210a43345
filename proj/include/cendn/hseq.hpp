// Polynomial sequences attached to the shifts q -> q -+ h(p), and the change
// of basis they induce on differential-sequence coefficients.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cendn/matrix.hpp"
#include "cendn/report.hpp"
#include "cendn/weyl.hpp"

namespace cendn {

/// lower[n] is the q-free part of (q - h)^n, upper[n] that of (q + h)^n.
struct HSeqPair {
  PolyP h;
  std::vector<PolyP> lower;
  std::vector<PolyP> upper;
};

/// lower[n] = -h lower[n-1] + lower[n-1]',  upper[n] = h upper[n-1] + upper[n-1]'.
inline HSeqPair h_sequences(const PolyP& h, int K) {
  if (K < 0) throw std::invalid_argument("h_sequences: K must be non-negative");
  HSeqPair s{h, {PolyP(1)}, {PolyP(1)}};
  for (int n = 1; n <= K; ++n) {
    const PolyP& lo = s.lower.back();
    const PolyP& up = s.upper.back();
    PolyP next_lo = lo.derivative() - h * lo;
    PolyP next_up = up.derivative() + h * up;
    s.lower.push_back(std::move(next_lo));
    s.upper.push_back(std::move(next_up));
  }
  return s;
}

/// Checks, for 0 <= xi <= k <= K,
///   sum_{s=xi}^{k} C(k-xi, s-xi) upper[s-xi] lower[k-s] = [xi == k]
/// ("hseq-orthogonality") and, for xi < k,
///   sum_{s=xi}^{k-1} C(k,s) C(s,xi) upper[s-xi] lower[k-s] = -C(k,xi) upper[k-xi]
/// ("hseq-binomial").
inline CheckReport verify_h_identities(const PolyP& h, int K) {
  const HSeqPair s = h_sequences(h, K);
  CheckReport rep;
  for (int k = 0; k <= K; ++k)
    for (int xi = 0; xi <= k; ++xi) {
      PolyP lhs;
      for (int t = xi; t <= k; ++t)
        lhs += (s.upper[t - xi] * s.lower[k - t]) * Rational(binomial(k - xi, t - xi));
      const std::string label = "xi=" + std::to_string(xi) + ",k=" + std::to_string(k);
      rep.add("hseq-orthogonality", label, lhs == PolyP(xi == k ? 1 : 0));
      if (xi < k) {
        PolyP sum;
        for (int t = xi; t <= k - 1; ++t)
          sum += (s.upper[t - xi] * s.lower[k - t]) *
                 Rational(binomial(k, t) * binomial(t, xi));
        rep.add("hseq-binomial", label,
                sum == s.upper[k - xi] * Rational(-binomial(k, xi)));
      }
    }
  return rep;
}

/// Unique decomposition a = stem q + constant with constant free of q.
struct QSplit {
  WeylElement stem;
  PolyP constant;
};

inline QSplit split_by_shift(const WeylElement& a) {
  QSplit out;
  for (const auto& [m, c] : a.terms()) {
    if (m.second == 0)
      out.constant.add_term(m.first, c);
    else
      out.stem.add_term({m.first, m.second - 1}, c);
  }
  return out;
}

/// (q + sign h)^n in normal form; sign is +1 or -1.
inline WeylElement shifted_q_power(const PolyP& h, int sign, int n) {
  const WeylElement base = WeylElement::q() + WeylElement(h) * Rational(sign);
  return weyl_pow(base, n);
}

/// Coefficients in the basis x = q + h: given A_k with
/// a(n) = sum_k C(n,k) A_k q^(n-k), returns B_s with
/// a(n) = sum_s C(n,s) B_s x^(n-s), via B_k = A_k + sum_{s<k} C(k,s) A_s lower[k-s].
/// The B_s do not terminate with the A_k in general; `length` (at least the
/// length of A) selects how many are returned.
inline std::vector<PolyMatrix<Var::p>> rebase_coefficients(
    const std::vector<PolyMatrix<Var::p>>& A, const PolyP& h, std::size_t length = 0) {
  if (A.empty()) return {};
  const int m = static_cast<int>(A.size()) - 1;
  const int top = std::max(m, static_cast<int>(length) - 1);
  const HSeqPair s = h_sequences(h, top);
  const PolyMatrix<Var::p> zero(A[0].size());
  std::vector<PolyMatrix<Var::p>> B;
  for (int k = 0; k <= top; ++k) {
    PolyMatrix<Var::p> b = k <= m ? A[k] : zero;
    for (int t = 0; t < k && t <= m; ++t)
      b += A[t].scaled(s.lower[k - t] * Rational(binomial(k, t)));
    B.push_back(std::move(b));
  }
  return B;
}

/// Inverse of rebase_coefficients: A_k = sum_s C(k,s) B_s upper[k-s].
inline std::vector<PolyMatrix<Var::p>> unrebase_coefficients(
    const std::vector<PolyMatrix<Var::p>>& B, const PolyP& h) {
  if (B.empty()) return {};
  const int m = static_cast<int>(B.size()) - 1;
  const HSeqPair s = h_sequences(h, m);
  std::vector<PolyMatrix<Var::p>> A;
  for (int k = 0; k <= m; ++k) {
    PolyMatrix<Var::p> a(B[0].size());
    for (int t = 0; t <= k; ++t)
      a += B[t].scaled(s.upper[k - t] * Rational(binomial(k, t)));
    A.push_back(std::move(a));
  }
  return A;
}

}  // namespace cendn
