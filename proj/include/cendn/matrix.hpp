// Dense square matrices over any of the coefficient rings in this library.
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cendn/errors.hpp"
#include "cendn/poly.hpp"

namespace cendn {

template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
  }
  Matrix(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
    if (n == 0 || data_.size() != n * n)
      throw std::invalid_argument("matrix data does not match size");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// Matrix unit e_ij (zero-based).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, T value = T(1)) {
    Matrix m(n);
    m(i, j) = std::move(value);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  const std::vector<T>& data() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& e : data_) out.push_back(f(e));
    return Matrix<U>(n_, std::move(out));
  }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b(k, j).is_zero()) continue;
          r(i, j) += aik * b(k, j);
        }
      }
    return r;
  }

  /// Scalar (ring element) times every entry, on the left.
  Matrix scaled(const T& s) const {
    return map([&](const T& e) { return s * e; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  void check_same(const Matrix& o) const {
    if (n_ != o.n_)
      throw DimensionMismatch("matrix sizes " + std::to_string(n_) + " and " +
                              std::to_string(o.n_));
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <Var X>
using PolyMatrix = Matrix<UniPoly<X>>;

/// Matrix minor obtained by deleting row r and column c.
template <typename T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t r, std::size_t c) {
  const std::size_t n = m.size();
  std::vector<T> out;
  out.reserve((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) out.push_back(m(i, j));
  }
  return Matrix<T>(n - 1, std::move(out));
}

/// Fraction-free (Bareiss) determinant over k[x].
template <Var X>
UniPoly<X> determinant(const PolyMatrix<X>& m) {
  const std::size_t n = m.size();
  std::vector<UniPoly<X>> a = m.data();
  auto at = [&](std::size_t i, std::size_t j) -> UniPoly<X>& { return a[i * n + j]; };
  UniPoly<X> prev(1);
  Rational sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k).is_zero()) ++swap;
      if (swap == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        at(i, j) = *num.exact_div(prev);
      }
      at(i, k) = {};
    }
    prev = at(k, k);
  }
  return at(n - 1, n - 1) * sign;
}

/// Classical adjugate: adj(M) M = M adj(M) = det(M) I.
template <Var X>
PolyMatrix<X> adjugate(const PolyMatrix<X>& m) {
  const std::size_t n = m.size();
  PolyMatrix<X> adj(n);
  if (n == 1) {
    adj(0, 0) = UniPoly<X>(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto cof = determinant(minor_matrix(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

}  // namespace cendn
