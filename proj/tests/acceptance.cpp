// Acceptance run: every criterion at exact equality, one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "cendn/autom.hpp"
#include "cendn/closure.hpp"
#include "cendn/hseq.hpp"
#include "cendn/ideal.hpp"
#include "cendn/operator.hpp"
#include "cendn/random.hpp"
#include "oracles.hpp"

#ifndef CENDN_CLI
#error "CENDN_CLI must name the CLI binary"
#endif

using namespace cendn;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

const BiPoly D = BiPoly::D(), v = BiPoly::v();
const PolyV x = PolyV::x();

std::size_t size_of(int c, int maxN) { return 1 + static_cast<std::size_t>(c % maxN); }

ConformalElement shifted_product(const ConformalElement& a, int n, const ConformalElement& b) {
  ConformalElement r = nproduct(a, n, b);
  if (!a.is_zero() && !b.is_zero()) r += ConformalElement::identity(a.size());
  return r;
}

Outcome axioms() {
  Outcome o;
  Random rng(101);
  for (int c = 0; c < 200; ++c) {
    const std::size_t N = size_of(c, 3);
    const auto a = rng.element(N, 3, 3), b = rng.element(N, 3, 3);
    o.require(check_conformal_axioms(a, b, 6).all_passed(), "axiom failure at pair " + std::to_string(c));
    for (int n = 0; n <= 6; ++n)
      o.require(nproduct(a, n, b) == oracle::nproduct(a, n, b),
                "closed form differs from recursion at pair " + std::to_string(c));
  }
  return o;
}

Outcome associativity() {
  Outcome o;
  Random rng(102);
  for (int c = 0; c < 100; ++c) {
    const std::size_t N = size_of(c, 3);
    const auto a = rng.element(N, 2, 2), b = rng.element(N, 2, 2), e = rng.element(N, 2, 2);
    o.require(check_associativity(a, b, e, 4).all_passed(), "triple " + std::to_string(c));
  }
  const auto a = rng.element(2, 2, 2), b = rng.element(2, 2, 2), e = rng.element(2, 2, 2);
  o.require(!check_associativity(a, b, e, 4, shifted_product).all_passed(),
            "corrupted product passed");
  return o;
}

Outcome lie() {
  Outcome o;
  Random rng(103);
  for (int c = 0; c < 100; ++c) {
    const std::size_t N = size_of(c, 2);
    const auto a = rng.element(N, 1, 2), b = rng.element(N, 1, 2), e = rng.element(N, 1, 2);
    o.require(check_lie(a, b, e, 3).all_passed(), "triple " + std::to_string(c));
  }
  return o;
}

Outcome virasoro() {
  Outcome o;
  const ConformalElement L(1, {-v});
  o.require(bracket(L, 0, L) == times_D(L) * Rational(-1), "n=0");
  o.require(bracket(L, 1, L) == L * Rational(-2), "n=1");
  for (int n = 2; n <= 8; ++n) o.require(bracket(L, n, L).is_zero(), "n=" + std::to_string(n));
  return o;
}

Outcome phi_iso() {
  Outcome o;
  Random rng(105);
  for (int c = 0; c < 100; ++c) {
    const std::size_t N = size_of(c, 3);
    const auto a = rng.element(N, 3, 3), b = rng.element(N, 3, 3);
    o.require(phi(phi_inv(a)) == a && phi_inv(phi(a)) == a, "inverse at " + std::to_string(c));
    for (int n = 0; n <= 4; ++n) {
      const auto rhs = nproduct_circ(phi(a), n, phi(b));
      o.require(phi(nproduct(a, n, b)) == rhs, "transport at " + std::to_string(c));
      o.require(rhs == oracle::nproduct_circ(phi(a), n, phi(b)), "circ closed form");
    }
  }
  return o;
}

Outcome operator_bridge() {
  Outcome o;
  Random rng(106);
  for (int c = 0; c < 100; ++c) {
    const std::size_t N = size_of(c, 2);
    const auto a = rng.element(N, 2, 2), b = rng.element(N, 2, 2);
    o.require(verify_composition(a, b, 3, 3).all_passed(), "composition " + std::to_string(c));
    for (int n = 0; n <= 3; ++n)
      o.require(symbol(a, n) == oracle::symbol(a, n), "symbol definition");
  }
  for (int c = 0; c < 100; ++c) {
    const std::size_t N = size_of(c, 2);
    const auto a = rng.element(N, 3, 3);
    std::vector<OperatorSample> s;
    for (int n = 0; n <= std::max(0, degree_D(a)) + 1; ++n) s.push_back({n, symbol(a, n)});
    o.require(reconstruct(fit_differential_sequence(s), N) == a, "round trip " + std::to_string(c));
  }
  return o;
}

Outcome action() {
  Outcome o;
  Random rng(107);
  for (int c = 0; c < 100; ++c) {
    const std::size_t N = size_of(c, 2);
    const auto a = rng.element(N, 2, 2), b = rng.element(N, 2, 2);
    for (int n = 0; n <= 3; ++n)
      o.require(act(symbol(a, n), b) == oracle::nproduct(a, n, b), "sample " + std::to_string(c));
    const auto w1 = rng.weyl_matrix(N, 2, 2), w2 = rng.weyl_matrix(N, 2, 2);
    o.require(act(w1 * w2, b) == act(w1, act(w2, b)), "associativity " + std::to_string(c));
  }
  return o;
}

Outcome weyl_kernel() {
  Outcome o;
  Random rng(108);
  oracle::SlowWeyl slow;
  for (int c = 0; c < 100; ++c) {
    const WeylElement a = rng.weyl(5, 5), b = rng.weyl(5, 5);
    o.require(a * b == slow.multiply(a, b), "pair " + std::to_string(c));
  }
  for (int c = 0; c < 50; ++c) {
    const std::size_t N = size_of(c, 3);
    const AutomorphismSpec t{rng.rational(), rng.unimodular(N, 2), rng.poly<Var::p>(3)};
    const auto P = WeylMatrix::identity(N).scaled(WeylElement::p());
    const auto Q = WeylMatrix::identity(N).scaled(WeylElement::q());
    const auto tp = apply_autom_weyl(P, t), tq = apply_autom_weyl(Q, t);
    o.require(tq * tp - tp * tq == WeylMatrix::identity(N), "relation " + std::to_string(c));
  }
  return o;
}

Outcome h_sequences_check() {
  Outcome o;
  Random rng(109);
  const WeylElement q = WeylElement::q();
  for (int c = 0; c < 20; ++c) {
    const PolyP h = rng.poly<Var::p>(3);
    o.require(verify_h_identities(h, 12).all_passed(), "identities, draw " + std::to_string(c));
    const auto s = h_sequences(h, 10);
    WeylElement lo(1), up(1);
    for (int n = 0; n <= 10; ++n) {
      o.require(split_by_shift(lo).constant == s.lower[n] && lo.coeff_q(0) == s.lower[n],
                "split (q-h)^" + std::to_string(n));
      o.require(split_by_shift(up).constant == s.upper[n], "split (q+h)^" + std::to_string(n));
      lo = lo * (q - WeylElement(h));
      up = up * (q + WeylElement(h));
    }
    std::vector<PolyMatrix<Var::p>> A;
    const std::size_t N = size_of(c, 2);
    for (int k = 0; k <= 3; ++k) {
      PolyMatrix<Var::p> m(N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = rng.poly<Var::p>(2);
      A.push_back(std::move(m));
    }
    o.require(unrebase_coefficients(rebase_coefficients(A, h), h) == A, "rebase round trip");
    // both coefficient systems describe the same operators
    const auto B = rebase_coefficients(A, h, 7);
    for (int n = 0; n <= 6; ++n) {
      WeylMatrix lhs(N), rhs(N);
      for (int k = 0; k <= n; ++k) {
        const Rational C(binomial(n, k));
        if (k < 4) lhs += times_q(weyl_matrix(A[k]), n - k) * C;
        WeylElement shift(1);
        for (int i = 0; i < n - k; ++i) shift = shift * (q + WeylElement(h));
        rhs += weyl_matrix(B[k]) * WeylMatrix::identity(N).scaled(shift) * C;
      }
      o.require(lhs == rhs, "rebase expansion n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome ideals() {
  Outcome o;
  Random rng(110);
  for (int c = 0; c < 50; ++c) {
    const std::size_t N = size_of(c, 3);
    const auto Q = rng.vmatrix(N, 3);
    const auto s = smith_normal_form(Q);
    o.require(s.T * Q * s.U == s.Dg && is_unimodular(s.T) && is_unimodular(s.U),
              "Smith identity " + std::to_string(c));
    const auto f = oracle::invariant_factors(Q);
    for (std::size_t i = 0; i < N; ++i)
      o.require(s.Dg(i, i) == f[i], "invariant factor " + std::to_string(c));
    if (!determinant(Q).is_zero()) {
      o.require(canonicalize_Q(Q).verified, "canonical witness " + std::to_string(c));
      o.require(left_ideal_member(e_nq(N, Q), Q), "e_nq " + std::to_string(c));
    }
  }
  int samples = 0;
  while (samples < 100) {
    const std::size_t N = size_of(samples, 2);
    const auto Q = rng.vmatrix(N, 2);
    if (determinant(Q).is_zero()) continue;
    const auto m = rng.element(N, 1, 1) * twisted(Q);
    const auto a = rng.element(N, 2, 2);
    o.require(left_ideal_member(m, Q), "constructed member");
    for (int n = 0; n < locality(a, m); ++n)
      o.require(left_ideal_member(nproduct(a, n, m), Q), "left action " + std::to_string(samples));
    ++samples;
  }
  return o;
}

Outcome automorphisms() {
  Outcome o;
  Random rng(111);
  for (int c = 0; c < 50; ++c) {
    const std::size_t N = size_of(c, 2);
    const AutomorphismSpec t{rng.rational(), rng.unimodular(N, 2), PolyP()};
    const AutomorphismSpec s{rng.rational(), rng.unimodular(N, 2), PolyP()};
    const auto a = rng.element(N, 2, 2), b = rng.element(N, 2, 2);
    for (int n = 0; n <= 3; ++n)
      o.require(apply_autom(nproduct(a, n, b), t) ==
                    nproduct(apply_autom(a, t), n, apply_autom(b, t)),
                "homomorphism " + std::to_string(c));
    o.require(apply_autom(apply_autom(a, s), t) == apply_autom(a, compose(t, s)),
              "composition " + std::to_string(c));
    o.require(apply_autom(apply_autom(a, t), inverse(t)) == a, "inverse " + std::to_string(c));
  }
  const AutomorphismSpec th{0, PolyMatrix<Var::v>::identity(1), PolyP::x()};
  WeylMatrix qn = WeylMatrix::identity(1);
  for (int n = 1; n <= 8; ++n) {
    qn = times_q(qn, 1);
    o.require(q_valuation(apply_autom_weyl(qn, th)) == 0, "discontinuity n=" + std::to_string(n));
  }
  return o;
}

Outcome classification() {
  Outcome o;
  auto E = [](std::size_t N, std::size_t i, std::size_t j, BiPoly f = BiPoly(1)) {
    return ConformalElement::unit(N, i, j, std::move(f));
  };
  auto curr = [&](std::size_t N) {
    std::vector<ConformalElement> g;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) g.push_back(E(N, i, j));
    return g;
  };
  const AutomorphismSpec conj{0, PolyMatrix<Var::v>(2, {PolyV(1), x, PolyV(), PolyV(1)}), PolyP()};
  std::vector<ConformalElement> curr2c;
  for (const auto& e : curr(2)) curr2c.push_back(apply_autom(e, conj));

  struct Instance {
    std::string name;
    SubalgebraPresentation pres;
    std::optional<PolyMatrix<Var::v>> Q;  // expected ideal, or none for current type
  };
  const std::vector<Instance> inst{
      {"Curr_1", {curr(1), 2, 6}, std::nullopt},
      {"Curr_2", {curr(2), 2, 6}, std::nullopt},
      {"conjugated Curr_2", {curr2c, 2, 6}, std::nullopt},
      {"Cend_{1,v}", {{ConformalElement(1, {v - D})}, 3, 8}, PolyMatrix<Var::v>(1, {x})},
      {"Cend_{2,diag(1,v)}",
       {{E(2, 0, 0), E(2, 1, 0), E(2, 0, 1, v - D), E(2, 1, 1, v - D)}, 3, 8},
       PolyMatrix<Var::v>::diagonal({PolyV(1), x})},
  };
  for (const auto& in : inst) {
    Classification c;
    int deg = 0;
    for (deg = 1; deg <= 6; ++deg) {
      c = classify_irreducible(in.pres, deg, 3);
      if (c.density.verdict == Density::Dense) break;
    }
    o.require(c.density.verdict == Density::Dense, in.name + ": density not certified by 6");
    o.require(!c.alarm, in.name + ": case-3 alarm");
    if (in.Q) {
      o.require(c.verdict == Verdict::LeftIdeal && c.Q &&
                    smith_normal_form(*c.Q).Dg == smith_normal_form(*in.Q).Dg,
                in.name + ": expected LeftIdeal");
    } else {
      o.require(c.verdict == Verdict::CurrentConjugate && c.witness,
                in.name + ": expected CurrentConjugate");
      if (c.witness)
        for (const auto& e : in.pres.generators)
          o.require(degree_v(apply_autom(e, *c.witness)) <= 0, in.name + ": witness");
    }
  }
  return o;
}

Outcome structure() {
  Outcome o;
  Random rng(113);
  for (int c = 0; c < 50; ++c) {
    const std::size_t N = size_of(c, 2);
    const auto A = rng.vmatrix(N, 3), B = rng.vmatrix(N, 3);
    const auto A1 = rng.vmatrix(N, 3), B1 = rng.vmatrix(N, 3);
    const auto a = lift_second(A), tb = twisted(B), a1 = lift_second(A1), tb1 = twisted(B1);
    const auto left = a * tb;
    const std::string tag = "case " + std::to_string(c);
    const int l1 = locality(a, tb), l2 = locality(left, a1), l3 = locality(left, a1 * tb1);
    for (int n = 0; n <= std::max({l1, l2, l3}); ++n) {
      const ConformalElement r1 = n == 0 ? left : ConformalElement(N);
      o.require(oracle::nproduct(a, n, tb) == r1, "current-left " + tag);
      const auto dBA1 = lift_second((B * A1).map([n](const PolyV& f) { return f.derivative(n); }));
      o.require(oracle::nproduct(left, n, a1) == a * dBA1, "right-current " + tag);
      o.require(oracle::nproduct(left, n, a1 * tb1) == a * dBA1 * tb1, "composite " + tag);
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string(CENDN_CLI) + " verify --seed 42";
  auto capture = [&](int& status) {
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    const int raw = pclose(f);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
  };
  int s1 = -1, s2 = -1;
  const std::string a = capture(s1), b = capture(s2);
  o.require(!a.empty(), "no output");
  o.require(a == b, "reports differ");
  o.require(s1 == 0 && s2 == 0, "verify reported failures");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"conformal axioms", axioms},
      {"associativity", associativity},
      {"Lie transfer", lie},
      {"Virasoro witness", virasoro},
      {"phi isomorphism", phi_iso},
      {"operator bridge", operator_bridge},
      {"action", action},
      {"Weyl kernel", weyl_kernel},
      {"h-sequences", h_sequences_check},
      {"ideal theory", ideals},
      {"automorphisms", automorphisms},
      {"classification", classification},
      {"structure relations", structure},
      {"determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << index << ". " << name << " (" << ms
              << " ms)" << (o.ok ? "" : "  " + o.note) << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
