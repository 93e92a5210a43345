// Automorphisms of M_N(k[D, v]) and of M_N(W) given by a shift, a unimodular
// matrix and (on the Weyl side) a polynomial h.
#pragma once

#include "cendn/conformal.hpp"
#include "cendn/smith.hpp"
#include "cendn/weyl.hpp"

namespace cendn {

/// (alpha, Q, h). Q is read in v on the conformal side and in p on the Weyl
/// side; the conformal side requires h = 0.
struct AutomorphismSpec {
  Rational alpha = 0;
  PolyMatrix<Var::v> Q;
  PolyP h;
};

inline AutomorphismSpec identity_spec(std::size_t N) {
  return {Rational(0), PolyMatrix<Var::v>::identity(N), PolyP()};
}

/// Q(v - D) as a bivariate matrix.
inline ConformalElement twisted(const PolyMatrix<Var::v>& Q) {
  return lift_second(Q).map([](const BiPoly& e) { return e.substitute_v_plus_D(-1); });
}

/// Q^{-1}(v) a(D, v + alpha) Q(v - D).
inline ConformalElement apply_autom(const ConformalElement& a, const AutomorphismSpec& t) {
  if (!t.h.is_zero()) throw std::invalid_argument("conformal automorphisms need h = 0");
  a.check_same(lift_second(t.Q));
  const auto Qinv = unimodular_inverse(t.Q);
  const ConformalElement shifted = a.map([&](const BiPoly& e) { return e.shift_v(t.alpha); });
  return lift_second(Qinv) * shifted * twisted(t.Q);
}

/// Q^{-1}(p) w(p + alpha, q - h(p)) Q(p).
inline WeylMatrix apply_autom_weyl(const WeylMatrix& w, const AutomorphismSpec& t) {
  const auto Qp = t.Q.map([](const PolyV& f) { return f.rename<Var::p>(); });
  if (w.size() != Qp.size()) throw DimensionMismatch("autom-weyl: sizes differ");
  const auto Qinv = unimodular_inverse(Qp);
  const WeylMatrix sub = w.map([&](const WeylElement& e) { return substitute(e, t.alpha, t.h); });
  return weyl_matrix(Qinv) * sub * weyl_matrix(Qp);
}

/// Parameters of Theta_{t1} o Theta_{t2} (t2 applied first):
/// alpha = alpha1 + alpha2, Q(v) = Q2(v + alpha1) Q1(v).
inline AutomorphismSpec compose(const AutomorphismSpec& t1, const AutomorphismSpec& t2) {
  t1.Q.check_same(t2.Q);
  if (!t1.h.is_zero() || !t2.h.is_zero())
    throw std::invalid_argument("composition is defined for h = 0");
  const auto Q2s = t2.Q.map([&](const PolyV& f) { return f.shifted(t1.alpha); });
  return {t1.alpha + t2.alpha, Q2s * t1.Q, PolyP()};
}

/// (-alpha, Q^{-1}(v - alpha)).
inline AutomorphismSpec inverse(const AutomorphismSpec& t) {
  if (!t.h.is_zero()) throw std::invalid_argument("inverse is defined for h = 0");
  const Rational minus = -t.alpha;
  const auto Qi = unimodular_inverse(t.Q).map([&](const PolyV& f) { return f.shifted(minus); });
  return {minus, Qi, PolyP()};
}

}  // namespace cendn
