// The first Weyl algebra W = k<p, q | qp - pq = 1> and matrices over it.
#pragma once

#include <algorithm>
#include <climits>
#include <optional>

#include "cendn/matrix.hpp"
#include "cendn/poly.hpp"

namespace cendn {

/// Element of W in normal form sum c p^i q^j (q-powers on the right),
/// keyed by (deg_p, deg_q).
class WeylElement : public detail::SparseTerms<WeylElement, std::pair<int, int>> {
  using Base = detail::SparseTerms<WeylElement, std::pair<int, int>>;

 public:
  WeylElement() = default;
  WeylElement(const Rational& c) { add_term({0, 0}, c); }  // NOLINT
  WeylElement(int c) : WeylElement(Rational(c)) {}         // NOLINT
  WeylElement(const PolyP& f) {                             // NOLINT
    for (const auto& [k, c] : f.terms()) add_term({k, 0}, c);
  }

  static WeylElement monomial(int degP, int degQ, const Rational& c = 1) {
    WeylElement r;
    r.add_term({degP, degQ}, c);
    return r;
  }
  static WeylElement p() { return monomial(1, 0); }
  static WeylElement q() { return monomial(0, 1); }

  WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }
  using Base::operator*=;

  /// Normal-form product. Uses
  ///   q^a p^b = sum_k k! C(a,k) C(b,k) p^(b-k) q^(a-k).
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    for (const auto& [m1, c1] : x.terms_)
      for (const auto& [m2, c2] : y.terms_) {
        const int a = m1.second, b = m2.first;
        const Rational c = c1 * c2;
        const int top = std::min(a, b);
        for (int k = 0; k <= top; ++k) {
          Integer w = factorial(k) * binomial(a, k) * binomial(b, k);
          r.add_term({m1.first + b - k, a - k + m2.second}, c * Rational(w));
        }
      }
    return r;
  }

  int degree_q() const {
    int d = kNegInfDegree;
    for (const auto& [m, c] : terms_) d = std::max(d, m.second);
    return d;
  }
  int degree_p() const {
    int d = kNegInfDegree;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first);
    return d;
  }

  /// Minimal q-degree among terms; INT_MAX for zero.
  int q_valuation() const {
    int d = INT_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.second);
    return d;
  }

  /// Coefficient of q^j as a polynomial in p (left factor).
  PolyP coeff_q(int j) const {
    PolyP r;
    for (const auto& [m, c] : terms_)
      if (m.second == j) r.add_term(m.first, c);
    return r;
  }

  /// Formal partial derivative in q (equals x p - p x).
  WeylElement d_q() const {
    WeylElement r;
    for (const auto& [m, c] : terms_)
      if (m.second > 0) r.add_term({m.first, m.second - 1}, c * m.second);
    return r;
  }
  /// Formal partial derivative in p (equals q x - x q).
  WeylElement d_p() const {
    WeylElement r;
    for (const auto& [m, c] : terms_)
      if (m.first > 0) r.add_term({m.first - 1, m.second}, c * m.first);
    return r;
  }

  /// Reduction modulo the left ideal W q^n.
  WeylElement q_truncate(int n) const {
    WeylElement r;
    for (const auto& [m, c] : terms_)
      if (m.second < n) r.terms_.emplace(m, c);
    return r;
  }

  /// x q^k.
  WeylElement times_q(int k) const {
    WeylElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(std::pair{m.first, m.second + k}, c);
    return r;
  }
};

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) { return a * b; }
inline WeylElement weyl_dq(const WeylElement& a) { return a.d_q(); }
inline WeylElement weyl_dp(const WeylElement& a) { return a.d_p(); }

inline WeylElement weyl_pow(const WeylElement& a, int n) {
  WeylElement r(1);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

using WeylMatrix = Matrix<WeylElement>;

inline WeylMatrix weyl_matrix(const PolyMatrix<Var::p>& m) {
  return m.map([](const PolyP& f) { return WeylElement(f); });
}

inline WeylMatrix weyl_dq(const WeylMatrix& a) {
  return a.map([](const WeylElement& e) { return e.d_q(); });
}
inline WeylMatrix weyl_dp(const WeylMatrix& a) {
  return a.map([](const WeylElement& e) { return e.d_p(); });
}

/// Minimal q-degree over all entries; std::nullopt stands for infinity.
inline std::optional<int> q_valuation(const WeylMatrix& a) {
  int d = INT_MAX;
  for (const auto& e : a.data()) d = std::min(d, e.q_valuation());
  if (d == INT_MAX) return std::nullopt;
  return d;
}
inline std::optional<int> q_valuation(const WeylElement& a) {
  int d = a.q_valuation();
  if (d == INT_MAX) return std::nullopt;
  return d;
}

inline WeylMatrix q_truncate(const WeylMatrix& a, int n) {
  return a.map([n](const WeylElement& e) { return e.q_truncate(n); });
}

inline WeylMatrix times_q(const WeylMatrix& a, int k) {
  return a.map([k](const WeylElement& e) { return e.times_q(k); });
}

/// Coefficient of q^j in every entry, as a matrix over k[p].
inline PolyMatrix<Var::p> coeff_q(const WeylMatrix& a, int j) {
  return a.map([j](const WeylElement& e) { return e.coeff_q(j); });
}

inline int degree_q(const WeylMatrix& a) {
  int d = kNegInfDegree;
  for (const auto& e : a.data()) d = std::max(d, e.degree_q());
  return d;
}

/// Image of x(p, q) under p -> p + alpha, q -> q - h(p). This is the
/// substitution part of the automorphisms theta_{alpha,Q,h}.
inline WeylElement substitute(const WeylElement& x, const Rational& alpha, const PolyP& h) {
  const WeylElement p_img = WeylElement::p() + WeylElement(alpha);
  const WeylElement q_img = WeylElement::q() - WeylElement(h);
  int maxp = std::max(0, x.degree_p()), maxq = std::max(0, x.degree_q());
  std::vector<WeylElement> ppow{WeylElement(1)}, qpow{WeylElement(1)};
  for (int i = 1; i <= maxp; ++i) ppow.push_back(ppow.back() * p_img);
  for (int j = 1; j <= maxq; ++j) qpow.push_back(qpow.back() * q_img);
  WeylElement r;
  for (const auto& [m, c] : x.terms()) r += (ppow[m.first] * qpow[m.second]) * c;
  return r;
}

}  // namespace cendn
