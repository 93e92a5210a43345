// Echelon (Hermite) form of finitely generated submodules of k[x]^m.
#pragma once

#include <cstddef>
#include <vector>

#include "cendn/poly.hpp"

namespace cendn {

template <Var X>
using CoordVector = std::vector<UniPoly<X>>;

/// Echelonized generating set of a k[x]-submodule of k[x]^dim.
///
/// Rows have strictly increasing pivot columns, monic pivots, and every
/// entry sitting above a pivot has smaller degree than that pivot. The form
/// is canonical: two bases of the same submodule compare equal.
template <Var X>
class HSubmoduleBasis {
 public:
  using Poly = UniPoly<X>;
  using Vec = CoordVector<X>;

  HSubmoduleBasis() = default;
  explicit HSubmoduleBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds a generator. Returns true if the span grew.
  bool insert(Vec x) {
    check_dim(x);
    if (reduce(x)) return false;
    std::size_t r = 0;
    while (!is_zero_vec(x)) {
      const std::size_t lc = lead_col(x);
      while (r < rows_.size() && pivots_[r] < lc) ++r;
      if (r == rows_.size() || pivots_[r] > lc) {
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r), std::move(x));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(r), lc);
        break;
      }
      // Same pivot column: replace the row by a gcd combination and carry
      // the complementary combination (which vanishes at lc) onward.
      Vec& b = rows_[r];
      const Poly& xb = x[lc];
      const Poly& bb = b[lc];
      auto [g, s, t] = xgcd(xb, bb);
      const Poly xq = *xb.exact_div(g);
      const Poly bq = *bb.exact_div(g);
      Vec top(dim_), rest(dim_);
      for (std::size_t j = 0; j < dim_; ++j) {
        top[j] = s * x[j] + t * b[j];
        rest[j] = bq * x[j] - xq * b[j];
      }
      b = std::move(top);
      x = std::move(rest);
      ++r;
    }
    normalize();
    return true;
  }

  /// True iff x lies in the span (successive pivot division).
  bool contains(Vec x) const {
    check_dim(x);
    return reduce(x);
  }

 private:
  static bool is_zero_vec(const Vec& x) {
    for (const auto& e : x)
      if (!e.is_zero()) return false;
    return true;
  }
  static std::size_t lead_col(const Vec& x) {
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero()) return j;
    return x.size();
  }
  void check_dim(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("coordinate vector size mismatch");
  }

  // Subtracts pivot multiples; returns true when x reduces to zero.
  bool reduce(Vec& x) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      const std::size_t lc = lead_col(x);
      if (lc == dim_) return true;
      if (lc < c) return false;
      if (lc > c) continue;
      auto [q, rem] = x[c].divmod(rows_[r][c]);
      if (!rem.is_zero()) return false;
      for (std::size_t j = c; j < dim_; ++j)
        if (!rows_[r][j].is_zero()) x[j] -= q * rows_[r][j];
    }
    return is_zero_vec(x);
  }

  void normalize() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational inv = Rational(1) / rows_[r][pivots_[r]].lead();
      if (inv != 1)
        for (auto& e : rows_[r]) e *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = i + 1; j < rows_.size(); ++j) {
        const std::size_t c = pivots_[j];
        if (rows_[i][c].is_zero()) continue;
        auto q = rows_[i][c].divmod(rows_[j][c]).first;
        if (q.is_zero()) continue;
        for (std::size_t k = c; k < dim_; ++k)
          if (!rows_[j][k].is_zero()) rows_[i][k] -= q * rows_[j][k];
      }
  }

  std::size_t dim_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

template <Var X>
bool operator==(const HSubmoduleBasis<X>& a, const HSubmoduleBasis<X>& b) {
  return a.dim() == b.dim() && a.rows() == b.rows();
}

/// Echelon form of the k[x]-span of gens.
template <Var X>
HSubmoduleBasis<X> hermite_reduce(const std::vector<CoordVector<X>>& gens, std::size_t dim) {
  HSubmoduleBasis<X> basis(dim);
  for (const auto& g : gens) basis.insert(g);
  return basis;
}

template <Var X>
HSubmoduleBasis<X> hermite_reduce(const std::vector<CoordVector<X>>& gens) {
  return hermite_reduce(gens, gens.empty() ? 0 : gens.front().size());
}

template <Var X>
bool hsubmodule_member(const CoordVector<X>& x, const HSubmoduleBasis<X>& basis) {
  return basis.contains(x);
}

}  // namespace cendn
