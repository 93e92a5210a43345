// One-sided ideals of M_N(k[D, v]): left ideals M_N(k[D, v]) Q(v - D) and
// right ideals P(v) M_N(k[D, v]).
#pragma once

#include <vector>

#include "cendn/autom.hpp"
#include "cendn/conformal.hpp"
#include "cendn/smith.hpp"

namespace cendn {

/// x lies in M_N(k[D, v]) Q(v - D). In coordinates w = v - D the ideal is
/// M_N(k[D, w]) Q(w), so membership is exact right division by Q(w).
inline bool left_ideal_member(const ConformalElement& x, const PolyMatrix<Var::v>& Q) {
  const ConformalElement xw = x.map([](const BiPoly& e) { return e.substitute_v_plus_D(1); });
  return divide_right_exact(xw, Q).has_value();
}

/// x lies in P(v) M_N(k[D, v]).
inline bool right_ideal_member(const ConformalElement& x, const PolyMatrix<Var::v>& P) {
  return divide_left_exact(P, x).has_value();
}

/// e_NN Q(v - D).
inline ConformalElement e_nq(std::size_t N, const PolyMatrix<Var::v>& Q) {
  if (Q.size() != N) throw DimensionMismatch("e_nq: Q has the wrong size");
  const ConformalElement tw = twisted(Q);
  ConformalElement r(N);
  for (std::size_t j = 0; j < N; ++j) r(N - 1, j) = tw(N - 1, j);
  return r;
}

struct CanonicalQ {
  SmithForm<Var::v> smith;
  AutomorphismSpec witness;  ///< (0, U): carries the ideal of Q onto that of Dg
  bool verified = false;
};

/// Smith form of Q together with the automorphism (0, U) mapping the left
/// ideal of Q onto the left ideal of Dg. Verification maps the generators
/// v^k e_ij Q(v - D) (k <= 1) forward and e_ij Dg(v - D) back, checking
/// membership on both sides, and checks that a non-member stays outside.
inline CanonicalQ canonicalize_Q(const PolyMatrix<Var::v>& Q) {
  CanonicalQ out{smith_normal_form(Q), {}, false};
  const std::size_t N = Q.size();
  out.witness = {Rational(0), out.smith.U, PolyP()};
  const auto& s = out.smith;
  bool ok = (s.T * Q * s.U == s.Dg) && is_unimodular(s.T) && is_unimodular(s.U);
  if (ok && !determinant(Q).is_zero()) {
    const AutomorphismSpec back = inverse(out.witness);
    const ConformalElement tq = twisted(Q), td = twisted(s.Dg);
    for (std::size_t i = 0; i < N && ok; ++i)
      for (std::size_t j = 0; j < N && ok; ++j) {
        const auto e = ConformalElement::unit(N, i, j, BiPoly(1));
        for (int k = 0; k <= 1 && ok; ++k) {
          const ConformalElement x = times_v(e, k) * tq;
          ok = left_ideal_member(apply_autom(x, out.witness), s.Dg);
        }
        if (ok) ok = left_ideal_member(apply_autom(e * td, back), Q);
      }
    // A non-member must stay a non-member when the ideal is proper.
    const auto id = ConformalElement::identity(N);
    if (ok && !is_unimodular(Q))
      ok = !left_ideal_member(apply_autom(id, out.witness), s.Dg);
  }
  out.verified = ok;
  return out;
}

}  // namespace cendn
