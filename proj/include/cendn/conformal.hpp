// Conformal algebra structure on M_N(k[D, v]).
//
// An element is an N x N matrix of polynomials in D and v; D acts through
// the free k[D]-module structure. The n-products are the unique sesquilinear
// extensions of
//   A(v) o_n B(v)   = A d_v^n(B)                                 (Diff)
//   A(v) o_(n) B(v) = sum_s D^s/s! d_v^(n+s)(A) B                (Diff-circ)
// where sesquilinear means (Da) o_n b = -n a o_(n-1) b and
// a o_n (Db) = D(a o_n b) + n a o_(n-1) b. Written out on monomials:
//   D^i A o_n D^j B = sum_t (-1)^i C(j,t) n!/(n-i-t)! D^(j-t) (A o_(n-i-t) B).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cendn/errors.hpp"
#include "cendn/matrix.hpp"
#include "cendn/poly.hpp"
#include "cendn/report.hpp"

namespace cendn {

using ConformalElement = Matrix<BiPoly>;

namespace detail {

// D-free base products on single monomials v^alpha, v^beta at index m.
struct DiffBase {
  void operator()(BiPoly& out, int degD, int alpha, int beta, int m, const Rational& c) const {
    if (m > beta) return;
    out.add_term({degD, alpha + beta - m}, c * Rational(falling(beta, m)));
  }
};

struct CircBase {
  void operator()(BiPoly& out, int degD, int alpha, int beta, int m, const Rational& c) const {
    // sum_s D^s / s! * d^(m+s) v^alpha * v^beta
    for (int s = 0; m + s <= alpha; ++s) {
      Rational coef = c * Rational(falling(alpha, m + s)) / Rational(factorial(s));
      out.add_term({degD + s, alpha - m - s + beta}, coef);
    }
  }
};

template <typename Base>
void sesqui_entry(BiPoly& out, const BiPoly& f, const BiPoly& g, int n, const Base& base) {
  for (const auto& [fm, fc] : f.terms()) {
    const int i = fm.first, alpha = fm.second;
    if (i > n) continue;
    const Rational sf = (i % 2 == 0) ? fc : Rational(-fc);
    for (const auto& [gm, gc] : g.terms()) {
      const int j = gm.first, beta = gm.second;
      const Rational c0 = sf * gc;
      for (int t = 0; t <= j && i + t <= n; ++t) {
        const int m = n - i - t;
        Rational c = c0 * Rational(binomial(j, t) * falling(n, i + t));
        base(out, j - t, alpha, beta, m, c);
      }
    }
  }
}

template <typename Base>
ConformalElement sesqui_product(const ConformalElement& a, int n, const ConformalElement& b,
                                const Base& base) {
  a.check_same(b);
  if (n < 0) throw std::invalid_argument("n-product index must be non-negative");
  const std::size_t N = a.size();
  ConformalElement r(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (b(k, j).is_zero()) continue;
        sesqui_entry(r(i, j), a(i, k), b(k, j), n, base);
      }
    }
  return r;
}

}  // namespace detail

/// a o_n b in the Diff presentation.
inline ConformalElement nproduct(const ConformalElement& a, int n, const ConformalElement& b) {
  return detail::sesqui_product(a, n, b, detail::DiffBase{});
}

/// a o_(n) b in the Diff-circ presentation.
inline ConformalElement nproduct_circ(const ConformalElement& a, int n,
                                      const ConformalElement& b) {
  return detail::sesqui_product(a, n, b, detail::CircBase{});
}

using ProductFn =
    std::function<ConformalElement(const ConformalElement&, int, const ConformalElement&)>;

inline ConformalElement times_D(const ConformalElement& a, int k = 1) {
  return a.map([k](const BiPoly& e) { return e.times_D(k); });
}
inline ConformalElement times_v(const ConformalElement& a, int k = 1) {
  return a.map([k](const BiPoly& e) { return e.times_v(k); });
}
/// D^(s) a = D^s / s! a.
inline ConformalElement divided_D(const ConformalElement& a, int s) {
  return times_D(a, s) * (Rational(1) / Rational(factorial(s)));
}

inline int degree_D(const ConformalElement& a) {
  int d = kNegInfDegree;
  for (const auto& e : a.data()) d = std::max(d, e.degree_D());
  return d;
}
inline int degree_v(const ConformalElement& a) {
  int d = kNegInfDegree;
  for (const auto& e : a.data()) d = std::max(d, e.degree_v());
  return d;
}

/// v -> v + D entrywise; carries Diff products to Diff-circ products.
inline ConformalElement phi(const ConformalElement& a) {
  return a.map([](const BiPoly& e) { return e.substitute_v_plus_D(1); });
}
inline ConformalElement phi_inv(const ConformalElement& a) {
  return a.map([](const BiPoly& e) { return e.substitute_v_plus_D(-1); });
}

/// Least L with a o_n b = 0 for every n >= L (0 when all products vanish).
/// Products vanish beyond deg_D(a) + deg_D(b) + deg_v(b).
inline int locality(const ConformalElement& a, const ConformalElement& b,
                    const ProductFn& product = nproduct) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return 0;
  const int bound = degree_D(a) + degree_D(b) + degree_v(b);
  for (int n = bound; n >= 0; --n)
    if (!product(a, n, b).is_zero()) return n + 1;
  return 0;
}

/// [a o_n b] = a o_n b - sum_s (-1)^(n+s) D^(s) (b o_(n+s) a).
inline ConformalElement bracket(const ConformalElement& a, int n, const ConformalElement& b,
                                const ProductFn& product = nproduct) {
  ConformalElement r = product(a, n, b);
  const int loc = locality(b, a, product);
  for (int s = 0; n + s < loc; ++s) {
    ConformalElement t = divided_D(product(b, n + s, a), s);
    if ((n + s) % 2 == 0)
      r -= t;
    else
      r += t;
  }
  return r;
}

/// Checks locality (products vanish from locality(a,b) on) and both
/// sesquilinearity axioms for n <= maxn.
inline CheckReport check_conformal_axioms(const ConformalElement& a, const ConformalElement& b,
                                          int maxn, const ProductFn& product = nproduct) {
  CheckReport rep;
  const int loc = locality(a, b, product);
  bool vanish = true;
  for (int n = loc; n <= std::max(maxn, loc) + 2; ++n)
    if (!product(a, n, b).is_zero()) vanish = false;
  rep.add("axiom-locality", "N=" + std::to_string(loc), vanish);
  const ConformalElement Da = times_D(a), Db = times_D(b);
  for (int n = 0; n <= maxn; ++n) {
    const std::string label = "n=" + std::to_string(n);
    ConformalElement lhs2 = product(Da, n, b);
    ConformalElement rhs2(a.size());
    ConformalElement lhs3 = product(a, n, Db);
    ConformalElement rhs3 = times_D(product(a, n, b));
    if (n > 0) {
      ConformalElement prev = product(a, n - 1, b);
      rhs2 = prev * Rational(-n);
      rhs3 += prev * Rational(n);
    }
    rep.add("axiom-D-left", label, lhs2 == rhs2);
    rep.add("axiom-D-right", label, lhs3 == rhs3);
  }
  return rep;
}

/// Evaluates both associativity systems for n, m <= maxn:
///   (a o_n b) o_m c = sum_s (-1)^s C(n,s) a o_(n-s) (b o_(m+s) c)   "assoc-left"
///   a o_n (b o_m c) = sum_s C(n,s) (a o_(n-s) b) o_(m+s) c           "assoc-right"
inline CheckReport check_associativity(const ConformalElement& a, const ConformalElement& b,
                                       const ConformalElement& c, int maxn,
                                       const ProductFn& product = nproduct) {
  CheckReport rep;
  for (int n = 0; n <= maxn; ++n)
    for (int m = 0; m <= maxn; ++m) {
      const std::string label = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
      ConformalElement lhs = product(product(a, n, b), m, c);
      ConformalElement rhs(a.size());
      for (int s = 0; s <= n; ++s) {
        ConformalElement t =
            product(a, n - s, product(b, m + s, c)) * Rational(binomial(n, s));
        if (s % 2 == 0)
          rhs += t;
        else
          rhs -= t;
      }
      rep.add("assoc-left", label, lhs == rhs);

      ConformalElement lhs2 = product(a, n, product(b, m, c));
      ConformalElement rhs2(a.size());
      for (int s = 0; s <= n; ++s)
        rhs2 += product(product(a, n - s, b), m + s, c) * Rational(binomial(n, s));
      rep.add("assoc-right", label, lhs2 == rhs2);
    }
  return rep;
}

/// Lie identities for the bracket:
///   [a o_n b] = -sum_s (-1)^(n+s) D^(s) [b o_(n+s) a]                         "lie-skew"
///   [a o_n [b o_m c]] - [b o_m [a o_n c]] = sum_s C(n,s) [[a o_(n-s) b] o_(m+s) c]  "lie-jacobi"
inline CheckReport check_lie(const ConformalElement& a, const ConformalElement& b,
                             const ConformalElement& c, int maxn,
                             const ProductFn& product = nproduct) {
  CheckReport rep;
  auto br = [&](const ConformalElement& x, int n, const ConformalElement& y) {
    return bracket(x, n, y, product);
  };
  auto bracket_locality = [&](const ConformalElement& x, const ConformalElement& y) {
    // the bracket vanishes wherever both x o y and y o x terms do
    return std::max(locality(x, y, product), locality(y, x, product));
  };
  for (int n = 0; n <= maxn; ++n) {
    ConformalElement lhs = br(a, n, b);
    ConformalElement rhs(a.size());
    const int loc = bracket_locality(b, a);
    for (int s = 0; n + s < loc; ++s) {
      ConformalElement t = divided_D(br(b, n + s, a), s);
      if ((n + s) % 2 == 0)
        rhs -= t;
      else
        rhs += t;
    }
    rep.add("lie-skew", "n=" + std::to_string(n), lhs == rhs);
  }
  for (int n = 0; n <= maxn; ++n)
    for (int m = 0; m <= maxn; ++m) {
      ConformalElement lhs = br(a, n, br(b, m, c)) - br(b, m, br(a, n, c));
      ConformalElement rhs(a.size());
      for (int s = 0; s <= n; ++s)
        rhs += br(br(a, n - s, b), m + s, c) * Rational(binomial(n, s));
      rep.add("lie-jacobi", "n=" + std::to_string(n) + ",m=" + std::to_string(m), lhs == rhs);
    }
  return rep;
}

/// Multiplication by v commutes with the left factor and shifts the right:
///   v (a o_n b) = (v a) o_n b,   a o_n (v b) = v (a o_n b) + n a o_(n-1) b.
inline CheckReport check_v_relations(const ConformalElement& a, const ConformalElement& b,
                                     int maxn, const ProductFn& product = nproduct) {
  CheckReport rep;
  for (int n = 0; n <= maxn; ++n) {
    const std::string label = "n=" + std::to_string(n);
    ConformalElement ab = product(a, n, b);
    rep.add("v-left", label, times_v(ab) == product(times_v(a), n, b));
    ConformalElement rhs = times_v(ab);
    if (n > 0) rhs += product(a, n - 1, b) * Rational(n);
    rep.add("v-right", label, product(a, n, times_v(b)) == rhs);
  }
  return rep;
}

/// 1 (x) A for a constant matrix A (row-major).
inline ConformalElement curr_embed(std::size_t N, const std::vector<Rational>& A) {
  if (A.size() != N * N) throw DimensionMismatch("curr_embed: expected N*N entries");
  std::vector<BiPoly> entries(A.begin(), A.end());
  return ConformalElement(N, std::move(entries));
}

/// The series sum_s (-D)^(s) h (x) d_v^s A^t(v) applied to h (x) A(v), i.e.
/// transpose followed by v -> v - D. Note sigma(sigma(v)) = v - 2D.
inline ConformalElement sigma(const ConformalElement& a) { return phi_inv(a.transpose()); }

/// a(D, v) -> a^t(D, D - v). Involutive, and
///   s(a o_n b) = sum_k (-1)^(n+k) D^(k) (s(b) o_(n+k) s(a)).
inline ConformalElement anti_involution(const ConformalElement& a) {
  return phi_inv(a.transpose().map([](const BiPoly& e) {
    BiPoly r;
    for (const auto& [m, c] : e.terms()) r.add_term(m, m.second % 2 ? Rational(-c) : c);
    return r;
  }));
}

/// "anti-involution": s(s(a)) = a; "anti-law": the product rule above.
inline CheckReport check_anti_involution(const ConformalElement& a, const ConformalElement& b,
                                         int maxn, const ProductFn& product = nproduct) {
  CheckReport rep;
  rep.add("anti-involution", "", anti_involution(anti_involution(a)) == a);
  const ConformalElement sa = anti_involution(a), sb = anti_involution(b);
  const int loc = locality(sb, sa, product);
  for (int n = 0; n <= maxn; ++n) {
    ConformalElement rhs(a.size());
    for (int k = 0; n + k < loc; ++k) {
      ConformalElement t = divided_D(product(sb, n + k, sa), k);
      if ((n + k) % 2 == 0)
        rhs += t;
      else
        rhs -= t;
    }
    rep.add("anti-law", "n=" + std::to_string(n), anti_involution(product(a, n, b)) == rhs);
  }
  return rep;
}

/// Scalar multiple of the identity matrix by a polynomial.
inline ConformalElement scalar_element(std::size_t N, const BiPoly& f) {
  ConformalElement r(N);
  for (std::size_t i = 0; i < N; ++i) r(i, i) = f;
  return r;
}

}  // namespace cendn
