// Dense linear algebra over the rationals: incremental row echelon spans and
// solving linear systems.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cendn/rational.hpp"

namespace cendn {

using RationalVector = std::vector<Rational>;

/// Reduced row echelon basis of a subspace of k^dim, grown one vector at a time.
class RationalRowSpace {
 public:
  explicit RationalRowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds v; returns true if the span grew.
  bool insert(RationalVector v) {
    check(v);
    reduce(v);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == dim_) return false;
    const Rational inv = Rational(1) / v[piv];
    for (auto& e : v) e *= inv;
    for (auto& r : rows_) {
      if (r[piv] == 0) continue;
      const Rational f = r[piv];
      for (std::size_t j = 0; j < dim_; ++j)
        if (v[j] != 0) r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(RationalVector v) const {
    check(v);
    reduce(v);
    for (const auto& e : v)
      if (e != 0) return false;
    return true;
  }

 private:
  void check(const RationalVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector size mismatch");
  }
  void reduce(RationalVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
  }

  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// One solution x of M x = b (free variables set to zero), or nullopt when
/// the system is inconsistent. M is given as a list of rows.
inline std::optional<RationalVector> solve_linear(std::vector<RationalVector> M,
                                                  RationalVector b, std::size_t cols) {
  if (M.size() != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
  const std::size_t rows = M.size();
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(M[r], M[sel]);
    std::swap(b[r], b[sel]);
    const Rational inv = Rational(1) / M[r][c];
    for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Rational f = M[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (M[r][j] != 0) M[i][j] -= f * M[r][j];
      b[i] -= f * b[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = b[i];
  return x;
}

}  // namespace cendn
