// Sparse univariate and bivariate polynomials over the rationals.
#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cendn/rational.hpp"

namespace cendn {

/// Degree reported for the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

namespace detail {

/// CRTP base holding a sparse map monomial-key -> nonzero coefficient.
/// Derived classes supply multiplication; linear structure lives here.
template <typename Derived, typename Key>
class SparseTerms {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;

  SparseTerms() = default;

  const map_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Derived& operator+=(const Derived& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return self();
  }
  Derived& operator-=(const Derived& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return self();
  }
  Derived& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return self();
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator-(Derived a) { return a *= Rational(-1); }
  friend Derived operator*(Derived a, const Rational& s) { return a *= s; }
  friend Derived operator*(const Rational& s, Derived a) { return a *= s; }

  friend bool operator==(const SparseTerms& a, const SparseTerms& b) {
    return a.terms_ == b.terms_;
  }

 protected:
  map_type terms_;

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
};

}  // namespace detail

/// Variable tag of a univariate polynomial ring.
enum class Var { v, p, D, w };

constexpr const char* var_name(Var x) {
  switch (x) {
    case Var::v: return "v";
    case Var::p: return "p";
    case Var::D: return "D";
    case Var::w: return "w";
  }
  return "?";
}

/// Element of k[x]. The tag is part of the type so k[v] and k[p] values
/// cannot be mixed without an explicit rename().
template <Var X>
class UniPoly : public detail::SparseTerms<UniPoly<X>, int> {
  using Base = detail::SparseTerms<UniPoly<X>, int>;

 public:
  static constexpr Var variable = X;

  UniPoly() = default;
  UniPoly(const Rational& c) { this->add_term(0, c); }  // NOLINT: constants embed
  UniPoly(int c) : UniPoly(Rational(c)) {}              // NOLINT

  static UniPoly monomial(int deg, const Rational& c = 1) {
    UniPoly r;
    r.add_term(deg, c);
    return r;
  }
  /// The variable itself.
  static UniPoly x() { return monomial(1); }

  int degree() const {
    return this->terms_.empty() ? kNegInfDegree : this->terms_.rbegin()->first;
  }
  Rational lead() const {
    return this->terms_.empty() ? Rational(0) : this->terms_.rbegin()->second;
  }
  bool is_constant() const { return degree() <= 0; }

  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  using Base::operator*=;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [i, c] : a.terms_)
      for (const auto& [j, d] : b.terms_) r.add_term(i + j, c * d);
    return r;
  }

  UniPoly derivative(int times = 1) const {
    UniPoly r;
    for (const auto& [k, c] : this->terms_)
      if (k >= times) r.add_term(k - times, c * Rational(falling(k, times)));
    return r;
  }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    int prev = degree();
    if (prev == kNegInfDegree) return acc;
    for (auto it = this->terms_.rbegin(); it != this->terms_.rend(); ++it) {
      for (int k = prev; k > it->first; --k) acc *= at;
      acc += it->second;
      prev = it->first;
    }
    for (int k = prev; k > 0; --k) acc *= at;
    return acc;
  }

  /// f(x + shift).
  UniPoly shifted(const Rational& shift) const {
    if (shift == 0) return *this;
    UniPoly r;
    for (const auto& [k, c] : this->terms_) {
      Rational pw = 1;
      for (int j = 0; j <= k; ++j) {
        // term C(k,j) shift^j x^(k-j)
        r.add_term(k - j, c * Rational(binomial(k, j)) * pw);
        pw *= shift;
      }
    }
    return r;
  }

  /// f(g(x)).
  UniPoly compose(const UniPoly& g) const {
    UniPoly r;
    for (auto it = this->terms_.rbegin(); it != this->terms_.rend(); ++it) {
      // Horner over a sparse map: multiply by g for each degree step.
      int next = std::next(it) == this->terms_.rend() ? 0 : std::next(it)->first;
      r += UniPoly(it->second);
      for (int k = it->first; k > next; --k) r = r * g;
    }
    return r;
  }

  template <Var Y>
  UniPoly<Y> rename() const {
    UniPoly<Y> r;
    for (const auto& [k, c] : this->terms_) r.add_term(k, c);
    return r;
  }

  UniPoly monic() const {
    if (this->is_zero()) return *this;
    return *this * (Rational(1) / lead());
  }

  /// Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q, r = *this;
    const int dd = d.degree();
    const Rational dl = d.lead();
    while (!r.is_zero() && r.degree() >= dd) {
      const int k = r.degree() - dd;
      const Rational c = r.lead() / dl;
      q.add_term(k, c);
      for (const auto& [j, e] : d.terms_) r.add_term(j + k, -c * e);
    }
    return {std::move(q), std::move(r)};
  }

  std::optional<UniPoly> exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }

  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }
};

using PolyV = UniPoly<Var::v>;
using PolyP = UniPoly<Var::p>;
using PolyD = UniPoly<Var::D>;
using PolyW = UniPoly<Var::w>;

/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic (or zero).
template <Var X>
std::tuple<UniPoly<X>, UniPoly<X>, UniPoly<X>> xgcd(const UniPoly<X>& a,
                                                    const UniPoly<X>& b) {
  UniPoly<X> r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (!r0.is_zero()) {
    Rational inv = Rational(1) / r0.lead();
    r0 *= inv;
    s0 *= inv;
    t0 *= inv;
  }
  return {r0, s0, t0};
}

/// Element of k[D, v], keyed by (deg_D, deg_v). Also used for k[D, w] when
/// working in shifted coordinates.
class BiPoly : public detail::SparseTerms<BiPoly, std::pair<int, int>> {
  using Base = detail::SparseTerms<BiPoly, std::pair<int, int>>;

 public:
  BiPoly() = default;
  BiPoly(const Rational& c) { add_term({0, 0}, c); }  // NOLINT
  BiPoly(int c) : BiPoly(Rational(c)) {}              // NOLINT
  BiPoly(const PolyV& f) {                             // NOLINT
    for (const auto& [k, c] : f.terms()) add_term({0, k}, c);
  }
  BiPoly(const PolyD& f) {  // NOLINT
    for (const auto& [k, c] : f.terms()) add_term({k, 0}, c);
  }

  static BiPoly monomial(int degD, int degV, const Rational& c = 1) {
    BiPoly r;
    r.add_term({degD, degV}, c);
    return r;
  }
  static BiPoly D() { return monomial(1, 0); }
  static BiPoly v() { return monomial(0, 1); }

  int degree_D() const {
    int d = kNegInfDegree;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }
  int degree_v() const {
    int d = kNegInfDegree;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  using Base::operator*=;

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [i, c] : a.terms_)
      for (const auto& [j, d] : b.terms_)
        r.add_term({i.first + j.first, i.second + j.second}, c * d);
    return r;
  }

  /// D^k times this.
  BiPoly times_D(int k = 1) const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(std::pair{m.first + k, m.second}, c);
    return r;
  }
  BiPoly times_v(int k = 1) const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(std::pair{m.first, m.second + k}, c);
    return r;
  }

  /// Partial derivative in v, applied `times` times.
  BiPoly d_v(int times = 1) const {
    BiPoly r;
    for (const auto& [m, c] : terms_)
      if (m.second >= times)
        r.add_term({m.first, m.second - times}, c * Rational(falling(m.second, times)));
    return r;
  }
  BiPoly d_D(int times = 1) const {
    BiPoly r;
    for (const auto& [m, c] : terms_)
      if (m.first >= times)
        r.add_term({m.first - times, m.second}, c * Rational(falling(m.first, times)));
    return r;
  }

  /// Substitution v -> v + factor * D.
  BiPoly substitute_v_plus_D(const Rational& factor) const {
    if (factor == 0) return *this;
    BiPoly r;
    for (const auto& [m, c] : terms_) {
      Rational pw = 1;
      for (int k = 0; k <= m.second; ++k) {
        r.add_term({m.first + k, m.second - k}, c * Rational(binomial(m.second, k)) * pw);
        pw *= factor;
      }
    }
    return r;
  }

  /// Substitution v -> v + shift.
  BiPoly shift_v(const Rational& shift) const {
    if (shift == 0) return *this;
    BiPoly r;
    for (const auto& [m, c] : terms_) {
      Rational pw = 1;
      for (int k = 0; k <= m.second; ++k) {
        r.add_term({m.first, m.second - k}, c * Rational(binomial(m.second, k)) * pw);
        pw *= shift;
      }
    }
    return r;
  }

  /// Coefficient of D^k as a polynomial in v.
  PolyV coeff_D(int k) const {
    PolyV r;
    for (const auto& [m, c] : terms_)
      if (m.first == k) r.add_term(m.second, c);
    return r;
  }
  /// Coefficient of v^k as a polynomial in D.
  PolyD coeff_v(int k) const {
    PolyD r;
    for (const auto& [m, c] : terms_)
      if (m.second == k) r.add_term(m.first, c);
    return r;
  }

  bool is_D_free() const { return degree_D() <= 0; }
  bool is_v_free() const { return degree_v() <= 0; }

  /// Exact division by a univariate polynomial in the second slot,
  /// performed separately on every D^k slice.
  template <Var X>
  std::optional<BiPoly> exact_div_second(const UniPoly<X>& d) const {
    BiPoly out;
    const int top = degree_D();
    for (int k = 0; k <= top; ++k) {
      PolyV slice = coeff_D(k);
      if (slice.is_zero()) continue;
      auto q = slice.exact_div(d.template rename<Var::v>());
      if (!q) return std::nullopt;
      for (const auto& [j, c] : q->terms()) out.add_term({k, j}, c);
    }
    return out;
  }
};

}  // namespace cendn
