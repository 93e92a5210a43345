// Smith normal form over k[x], unimodular inverses and exact matrix division.
#pragma once

#include <optional>
#include <utility>

#include "cendn/errors.hpp"
#include "cendn/matrix.hpp"

namespace cendn {

template <Var X>
struct SmithForm {
  PolyMatrix<X> T;   ///< unimodular, acts on rows
  PolyMatrix<X> Dg;  ///< diag(f_1..f_N), f_i monic or zero, f_i | f_{i+1}
  PolyMatrix<X> U;   ///< unimodular, acts on columns
};

namespace detail {

template <typename M>
void swap_rows(M& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.size(); ++j) std::swap(m(a, j), m(b, j));
}
template <typename M>
void swap_cols(M& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.size(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += f * row_src
template <typename M, typename F>
void add_row(M& m, std::size_t dst, std::size_t src, const F& f) {
  for (std::size_t j = 0; j < m.size(); ++j)
    if (!m(src, j).is_zero()) m(dst, j) += f * m(src, j);
}
template <typename M, typename F>
void add_col(M& m, std::size_t dst, std::size_t src, const F& f) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) += m(i, src) * f;
}

}  // namespace detail

/// Computes T, Dg, U with T Q U = Dg. Pivots are chosen by minimal degree,
/// ties broken by lowest (row, column).
template <Var X>
SmithForm<X> smith_normal_form(const PolyMatrix<X>& Q) {
  using P = UniPoly<X>;
  const std::size_t n = Q.size();
  PolyMatrix<X> A = Q;
  auto T = PolyMatrix<X>::identity(n);
  auto U = PolyMatrix<X>::identity(n);

  for (std::size_t t = 0; t < n; ++t) {
    bool empty = false;
    for (;;) {
      // Minimal-degree pivot in the trailing block.
      std::size_t pr = n, pc = n;
      int best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (A(i, j).is_zero()) continue;
          if (pr == n || A(i, j).degree() < best) {
            pr = i;
            pc = j;
            best = A(i, j).degree();
          }
        }
      if (pr == n) {
        empty = true;
        break;
      }
      detail::swap_rows(A, t, pr);
      detail::swap_rows(T, t, pr);
      detail::swap_cols(A, t, pc);
      detail::swap_cols(U, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (A(i, t).is_zero()) continue;
        auto [q, r] = A(i, t).divmod(A(t, t));
        const P f = -q;
        detail::add_row(A, i, t, f);
        detail::add_row(T, i, t, f);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j).is_zero()) continue;
        auto [q, r] = A(t, j).divmod(A(t, t));
        const P f = -q;
        detail::add_col(A, j, t, f);
        detail::add_col(U, j, t, f);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!A(i, j).is_zero() && !A(i, j).divmod(A(t, t)).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      detail::add_row(A, t, bad, P(1));
      detail::add_row(T, t, bad, P(1));
    }
    if (empty) break;
    const Rational inv = Rational(1) / A(t, t).lead();
    for (std::size_t j = 0; j < n; ++j) {
      A(t, j) *= inv;
      T(t, j) *= inv;
    }
  }
  return {std::move(T), std::move(A), std::move(U)};
}

/// Inverse of a matrix with nonzero constant determinant.
template <Var X>
PolyMatrix<X> unimodular_inverse(const PolyMatrix<X>& Q) {
  const auto det = determinant(Q);
  if (det.is_zero() || !det.is_constant())
    throw NotUnimodular("determinant is not a nonzero constant");
  return adjugate(Q) * (Rational(1) / det.lead());
}

template <Var X>
bool is_unimodular(const PolyMatrix<X>& Q) {
  const auto det = determinant(Q);
  return !det.is_zero() && det.is_constant();
}

/// Y with Y Q = X, or nullopt if no polynomial solution exists.
template <Var X>
std::optional<PolyMatrix<X>> divide_right_exact(const PolyMatrix<X>& Xm,
                                                const PolyMatrix<X>& Q) {
  Xm.check_same(Q);
  const auto det = determinant(Q);
  if (det.is_zero()) throw SingularQ("det Q = 0");
  PolyMatrix<X> Y = Xm * adjugate(Q);
  PolyMatrix<X> out(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i)
    for (std::size_t j = 0; j < Q.size(); ++j) {
      auto q = Y(i, j).exact_div(det);
      if (!q) return std::nullopt;
      out(i, j) = std::move(*q);
    }
  return out;
}

/// Lifts a univariate matrix into bivariate entries, placing the variable in
/// the second (v) slot.
template <Var X>
Matrix<BiPoly> lift_second(const PolyMatrix<X>& Q) {
  return Q.map([](const UniPoly<X>& f) { return BiPoly(f.template rename<Var::v>()); });
}

/// Y with Y Q = Xm where Xm has bivariate entries and Q is univariate in the
/// second slot; division runs slice by slice in D.
template <Var X>
std::optional<Matrix<BiPoly>> divide_right_exact(const Matrix<BiPoly>& Xm,
                                                 const PolyMatrix<X>& Q) {
  Xm.check_same(lift_second(Q));
  const auto det = determinant(Q);
  if (det.is_zero()) throw SingularQ("det Q = 0");
  Matrix<BiPoly> Y = Xm * lift_second(adjugate(Q));
  Matrix<BiPoly> out(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i)
    for (std::size_t j = 0; j < Q.size(); ++j) {
      auto q = Y(i, j).exact_div_second(det);
      if (!q) return std::nullopt;
      out(i, j) = std::move(*q);
    }
  return out;
}

/// Y with P Y = Xm, P univariate in the second slot.
template <Var X>
std::optional<Matrix<BiPoly>> divide_left_exact(const PolyMatrix<X>& P,
                                                const Matrix<BiPoly>& Xm) {
  Xm.check_same(lift_second(P));
  const auto det = determinant(P);
  if (det.is_zero()) throw SingularP("det P = 0");
  Matrix<BiPoly> Y = lift_second(adjugate(P)) * Xm;
  Matrix<BiPoly> out(P.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j) {
      auto q = Y(i, j).exact_div_second(det);
      if (!q) return std::nullopt;
      out(i, j) = std::move(*q);
    }
  return out;
}

}  // namespace cendn
