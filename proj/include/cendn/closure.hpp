// Bounded closures of finitely presented conformal subalgebras, their
// k[v]-closures, and the classification of irreducible ones.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cendn/autom.hpp"
#include "cendn/hermite.hpp"
#include "cendn/ideal.hpp"
#include "cendn/linalg.hpp"
#include "cendn/operator.hpp"

namespace cendn {

struct SubalgebraPresentation {
  std::vector<ConformalElement> generators;
  int vDegBound = 4;
  int iterBound = 8;
};

/// Coordinates of M_N(k[D, v]) truncated at v-degree `cap` over the k[D]-basis
/// v^k e_ij; index ((k N) + i) N + j.
struct VCoords {
  std::size_t N;
  int cap;

  std::size_t dim() const { return static_cast<std::size_t>(cap + 1) * N * N; }

  std::optional<CoordVector<Var::D>> encode(const ConformalElement& a) const {
    if (degree_v(a) > cap) return std::nullopt;
    CoordVector<Var::D> x(dim());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (const auto& [m, c] : a(i, j).terms())
          x[(static_cast<std::size_t>(m.second) * N + i) * N + j].add_term(m.first, c);
    return x;
  }

  ConformalElement decode(const CoordVector<Var::D>& x) const {
    ConformalElement a(N);
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
      const std::size_t j = idx % N, i = (idx / N) % N;
      const int k = static_cast<int>(idx / (N * N));
      for (const auto& [d, c] : x[idx].terms()) a(i, j).add_term({d, k}, c);
    }
    return a;
  }
};

struct ClosureResult {
  HSubmoduleBasis<Var::D> basis;
  VCoords coords{1, 0};
  bool fixedPoint = false;  ///< an iteration added nothing
  bool truncated = false;   ///< some product exceeded the v-degree bound
  int iterations = 0;

  bool closed() const { return fixedPoint && !truncated; }
  std::vector<ConformalElement> elements() const {
    std::vector<ConformalElement> out;
    for (const auto& r : basis.rows()) out.push_back(coords.decode(r));
    return out;
  }
};

/// Iterates H-span and all n-products up to the bounds. Products above
/// vDegBound are dropped and flagged; reaching iterBound without a fixed
/// point leaves fixedPoint false.
inline ClosureResult subalgebra_closure(const SubalgebraPresentation& pres) {
  if (pres.vDegBound < 0 || pres.iterBound < 1)
    throw std::invalid_argument("closure bounds out of range");
  ClosureResult res;
  if (pres.generators.empty()) {
    res.fixedPoint = true;
    return res;
  }
  const std::size_t N = pres.generators.front().size();
  res.coords = VCoords{N, pres.vDegBound};
  res.basis = HSubmoduleBasis<Var::D>(res.coords.dim());

  std::vector<ConformalElement> gens;  // generating set of the current span
  std::size_t processed = 0;
  for (const auto& g : pres.generators) {
    g.check_same(pres.generators.front());
    auto x = res.coords.encode(g);
    if (!x) throw BoundTooSmall("generator exceeds the v-degree bound");
    if (res.basis.insert(*x)) gens.push_back(g);
  }

  for (int it = 0; it < pres.iterBound; ++it) {
    ++res.iterations;
    const std::size_t old = gens.size();
    bool grew = false;
    for (std::size_t i = 0; i < old; ++i)
      for (std::size_t j = 0; j < old; ++j) {
        if (i < processed && j < processed) continue;
        const ConformalElement a = gens[i];
        const ConformalElement b = gens[j];
        const int loc = locality(a, b);
        for (int n = 0; n < loc; ++n) {
          ConformalElement p = nproduct(a, n, b);
          auto x = res.coords.encode(p);
          if (!x) {
            res.truncated = true;
            continue;
          }
          if (res.basis.insert(std::move(*x))) {
            gens.push_back(std::move(p));
            grew = true;
          }
        }
      }
    processed = old;
    if (!grew) {
      res.fixedPoint = true;
      break;
    }
  }
  return res;
}

enum class Directness { Direct, Overlap, NonDirectNoOverlap };

inline const char* directness_name(Directness d) {
  switch (d) {
    case Directness::Direct: return "Direct";
    case Directness::Overlap: return "Overlap";
    case Directness::NonDirectNoOverlap: return "NonDirectNoOverlap";
  }
  return "?";
}

struct KVClosure {
  PolyMatrix<Var::v> idealQ;
  Directness directness = Directness::Direct;
  int certifiedAtBound = -1;  ///< v^k e_ij Q(v - D) lie in k[v]C for k <= this
  bool alarm = false;         ///< case 3 observed at a closed fixed point
  ClosureResult closure;
};

namespace detail {

// k[D]-rank of the span of v^k C for k <= upto.
inline std::size_t shifted_rank(const std::vector<ConformalElement>& C, const VCoords& wide,
                                int upto) {
  HSubmoduleBasis<Var::D> B(wide.dim());
  for (int k = 0; k <= upto; ++k)
    for (const auto& c : C) B.insert(*wide.encode(times_v(c, k)));
  return B.rank();
}

// Hermite form over k[w] of the rows of every D-slice of x(D, w + D).
inline PolyMatrix<Var::v> extract_ideal_matrix(const std::vector<ConformalElement>& K,
                                               std::size_t N) {
  HSubmoduleBasis<Var::v> rows(N);
  for (const auto& x : K) {
    const ConformalElement xw = x.map([](const BiPoly& e) { return e.substitute_v_plus_D(1); });
    const int top = std::max(0, degree_D(xw));
    for (std::size_t i = 0; i < N; ++i)
      for (int d = 0; d <= top; ++d) {
        CoordVector<Var::v> r(N);
        bool nz = false;
        for (std::size_t j = 0; j < N; ++j) {
          r[j] = xw(i, j).coeff_D(d);
          if (!r[j].is_zero()) nz = true;
        }
        if (nz) rows.insert(std::move(r));
      }
  }
  if (rows.rank() < N) throw BoundTooSmall("k[v]-closure has deficient rank at the bound");
  PolyMatrix<Var::v> Q(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) Q(i, j) = rows.rows()[i][j];
  return Q;
}

}  // namespace detail

/// Sum of v^k C for k <= vDegBound, the left ideal it spans in coordinates
/// w = v - D, and the directness of the sum.
inline KVClosure kv_closure(const SubalgebraPresentation& pres) {
  KVClosure out;
  out.closure = subalgebra_closure(pres);
  if (!out.closure.fixedPoint) throw NotClosed("closure did not reach a fixed point");
  if (out.closure.basis.empty()) throw BoundTooSmall("closure is zero");
  const std::size_t N = out.closure.coords.N;
  const int d = pres.vDegBound;
  const VCoords wide{N, 2 * d};
  const std::vector<ConformalElement> C = out.closure.elements();

  HSubmoduleBasis<Var::D> K(wide.dim());
  for (int k = 0; k <= d; ++k)
    for (const auto& c : C) K.insert(*wide.encode(times_v(c, k)));
  std::vector<ConformalElement> Kel;
  for (const auto& r : K.rows()) Kel.push_back(wide.decode(r));
  out.idealQ = detail::extract_ideal_matrix(Kel, N);

  const ConformalElement tq = twisted(out.idealQ);
  auto in_K = [&](const ConformalElement& x) {
    auto e = wide.encode(x);
    return e && K.contains(*e);
  };
  for (int k = 0; k <= d; ++k) {
    bool all = true;
    for (std::size_t i = 0; i < N && all; ++i)
      for (std::size_t j = 0; j < N && all; ++j)
        all = in_K(times_v(ConformalElement::unit(N, i, j, BiPoly(1)), k) * tq);
    if (!all) break;
    out.certifiedAtBound = k;
  }
  if (out.certifiedAtBound < 0)
    throw BoundTooSmall("ideal generators not reached at the bound");

  // Left-ideal closure on samples: e_ij and v e_ij against certified generators.
  for (int k = 0; k <= out.certifiedAtBound; ++k)
    for (std::size_t l = 0; l < N; ++l)
      for (std::size_t m = 0; m < N; ++m) {
        const ConformalElement g = times_v(ConformalElement::unit(N, l, m, BiPoly(1)), k) * tq;
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j)
            for (int s = 0; s <= 1; ++s) {
              if (k + s > out.certifiedAtBound) continue;
              const ConformalElement a = times_v(ConformalElement::unit(N, i, j, BiPoly(1)), s);
              const int loc = locality(a, g);
              for (int n = 0; n < loc; ++n)
                if (!in_K(nproduct(a, n, g)))
                  throw BoundTooSmall("k[v]-closure is not a left ideal at the bound");
            }
      }

  const std::size_t r = C.size();
  if (detail::shifted_rank(C, wide, 1) < 2 * r) {
    out.directness = Directness::Overlap;
  } else {
    bool direct = true;
    for (int k = 2; k <= d && direct; ++k)
      direct = detail::shifted_rank(C, wide, k) == static_cast<std::size_t>(k + 1) * r;
    if (direct) {
      // a truncated closure can look direct only because products were dropped
      if (!out.closure.closed())
        throw BoundTooSmall("sum looks direct but the closure is truncated");
      out.directness = Directness::Direct;
    } else {
      if (!out.closure.closed())
        throw BoundTooSmall("sum is not direct and the closure is truncated");
      out.directness = Directness::NonDirectNoOverlap;
      out.alarm = true;
    }
  }
  return out;
}

enum class Verdict { CurrentConjugate, LeftIdeal, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CurrentConjugate: return "CurrentConjugate";
    case Verdict::LeftIdeal: return "LeftIdeal";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::optional<AutomorphismSpec> witness;  ///< CurrentConjugate
  std::optional<PolyMatrix<Var::v>> Q;      ///< LeftIdeal
  DensityResult density;
  int degBound = 0;
  int certifiedAtBound = -1;
  bool alarm = false;
  std::string reason;
};

namespace detail {

// Coefficient vector of a polynomial matrix over k[p] with entries of degree
// <= deg, laid out entry by entry.
inline RationalVector flatten(const PolyMatrix<Var::p>& M, int deg) {
  const std::size_t N = M.size();
  RationalVector out(N * N * static_cast<std::size_t>(deg + 1), Rational(0));
  for (std::size_t e = 0; e < N * N; ++e)
    for (const auto& [k, c] : M.data()[e].terms())
      if (k <= deg) out[e * static_cast<std::size_t>(deg + 1) + k] = c;
  return out;
}

// Trace-free A of degree <= degA with s' = s A - A s for every s in S.
inline std::optional<PolyMatrix<Var::p>> solve_logarithmic_derivative(
    const std::vector<PolyMatrix<Var::p>>& S, std::size_t N, int degA) {
  const std::size_t per = static_cast<std::size_t>(degA + 1);
  const std::size_t unknowns = N * N * per;
  int degS = 0;
  for (const auto& s : S)
    for (const auto& e : s.data()) degS = std::max(degS, e.degree());
  const int degEq = degS + degA;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (const auto& s : S) {
    // Column u of the system is the contribution of unknown u to s A - A s.
    std::vector<RationalVector> cols;
    for (std::size_t u = 0; u < unknowns; ++u) {
      const std::size_t entry = u / per;
      const int k = static_cast<int>(u % per);
      auto E = PolyMatrix<Var::p>::unit(N, entry / N, entry % N, PolyP::monomial(k));
      PolyMatrix<Var::p> img = s * E - E * s;
      cols.push_back(flatten(img, degEq));
    }
    const RationalVector target =
        flatten(s.map([](const PolyP& f) { return f.derivative(); }), degEq);
    for (std::size_t r = 0; r < target.size(); ++r) {
      RationalVector row(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) row[u] = cols[u][r];
      rows.push_back(std::move(row));
      rhs.push_back(target[r]);
    }
  }
  for (int k = 0; k <= degA; ++k) {
    RationalVector row(unknowns, Rational(0));
    for (std::size_t i = 0; i < N; ++i) row[(i * N + i) * per + k] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  auto x = solve_linear(std::move(rows), std::move(rhs), unknowns);
  if (!x) return std::nullopt;
  PolyMatrix<Var::p> A(N);
  for (std::size_t e = 0; e < N * N; ++e)
    for (int k = 0; k <= degA; ++k)
      A(e / N, e % N).add_term(k, (*x)[e * per + k]);
  return A;
}

// Polynomial P with P' = P A and P(0) = I, if one of degree <= degP exists.
inline std::optional<PolyMatrix<Var::p>> integrate_logarithmic_derivative(
    const PolyMatrix<Var::p>& A, int degP) {
  const std::size_t N = A.size();
  int degA = 0;
  for (const auto& e : A.data()) degA = std::max(degA, e.degree());
  std::vector<Matrix<PolyP>> coeffA;  // A_j as constant matrices
  for (int j = 0; j <= degA; ++j)
    coeffA.push_back(A.map([j](const PolyP& f) { return PolyP(f.coeff(j)); }));
  std::vector<PolyMatrix<Var::p>> P{PolyMatrix<Var::p>::identity(N)};
  for (int k = 0; k < degP + degA + 1; ++k) {
    PolyMatrix<Var::p> acc(N);
    for (int j = 0; j <= degA && j <= k; ++j) acc += P[k - j] * coeffA[j];
    P.push_back(acc * (Rational(1) / Rational(k + 1)));
  }
  for (std::size_t k = static_cast<std::size_t>(degP) + 1; k < P.size(); ++k)
    if (!P[k].is_zero()) return std::nullopt;
  PolyMatrix<Var::p> out(N);
  for (int k = 0; k <= degP; ++k)
    out += P[k].scaled(PolyP::monomial(k));
  const auto dP = out.map([](const PolyP& f) { return f.derivative(); });
  if (dP != out * A) return std::nullopt;
  return out;
}

}  // namespace detail

/// Searches for (0, R) with Theta_{0,R} carrying the closure into the current
/// subalgebra. The degree-0 symbols b(0) of a conjugate Q^{-1} M_N(k) Q span
/// an N^2-dimensional space satisfying s' = [s, Q^{-1} Q']; the logarithmic
/// derivative is solved for linearly and integrated.
inline std::optional<AutomorphismSpec> find_current_witness(const std::vector<ConformalElement>& C,
                                                           std::size_t N, int degBound) {
  std::vector<PolyMatrix<Var::p>> S;
  int degS = 0;
  {
    RationalRowSpace span(N * N * static_cast<std::size_t>(2 * degBound + 1));
    for (const auto& b : C) {
      const auto s0 = coeff_q(symbol(b, 0), 0);
      for (const auto& e : s0.data()) degS = std::max(degS, e.degree());
      if (degS > 2 * degBound) return std::nullopt;
      if (span.insert(detail::flatten(s0, 2 * degBound))) S.push_back(s0);
    }
  }
  if (S.size() != N * N) return std::nullopt;
  const int degA = std::max(0, 2 * degBound);
  auto A = detail::solve_logarithmic_derivative(S, N, degA);
  if (!A) return std::nullopt;
  auto P = detail::integrate_logarithmic_derivative(*A, std::max(0, degBound * static_cast<int>(N)));
  if (!P || !is_unimodular(*P)) return std::nullopt;
  const auto Pv = P->map([](const PolyP& f) { return f.rename<Var::v>(); });
  AutomorphismSpec w{Rational(0), unimodular_inverse(Pv), PolyP()};

  // The images must be v-free and span every e_ij over k[D].
  const VCoords flat{N, 0};
  HSubmoduleBasis<Var::D> span(flat.dim());
  for (const auto& b : C) {
    const ConformalElement img = apply_autom(b, w);
    auto x = flat.encode(img);
    if (!x) return std::nullopt;
    span.insert(std::move(*x));
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!span.contains(*flat.encode(ConformalElement::unit(N, i, j, BiPoly(1)))))
        return std::nullopt;
  return w;
}

/// Density check at degBound (symbol index up to nBound), then the k[v]
/// closure decides between a current conjugate and a left ideal. Bound
/// failures give Unknown with a reason.
inline Classification classify_irreducible(const SubalgebraPresentation& pres, int degBound,
                                           int nBound) {
  Classification out;
  out.degBound = degBound;
  out.density = orbit_density_check(pres.generators, degBound, nBound);
  if (out.density.verdict != Density::Dense) {
    out.reason = "density not certified at the bound";
    return out;
  }
  KVClosure kv;
  try {
    kv = kv_closure(pres);
  } catch (const NotClosed& e) {
    out.reason = std::string("NotClosed: ") + e.what();
    return out;
  } catch (const BoundTooSmall& e) {
    out.reason = std::string("BoundTooSmall: ") + e.what();
    return out;
  }
  out.certifiedAtBound = kv.certifiedAtBound;
  out.alarm = kv.alarm;
  switch (kv.directness) {
    case Directness::Overlap:
      out.verdict = Verdict::LeftIdeal;
      out.Q = kv.idealQ;
      return out;
    case Directness::Direct: {
      const std::size_t N = kv.closure.coords.N;
      auto w = find_current_witness(kv.closure.elements(), N, pres.vDegBound);
      if (w) {
        out.verdict = Verdict::CurrentConjugate;
        out.witness = std::move(w);
      } else {
        out.reason = "no current-conjugating witness within the degree bound";
      }
      return out;
    }
    case Directness::NonDirectNoOverlap:
      out.reason = "non-direct sum without overlap at a closed fixed point";
      return out;
  }
  return out;
}

}  // namespace cendn
