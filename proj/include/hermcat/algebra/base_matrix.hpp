#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

// Dense row-major matrix over a base field, used for exact Gaussian elimination.
template <class Field>
struct BaseMatrix {
  using Scalar = typename Field::Elem;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  BaseMatrix() = default;
  BaseMatrix(std::size_t r, std::size_t c, const Scalar& fill) : rows(r), cols(c), data(r * c, fill) {}

  Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const BaseMatrix&, const BaseMatrix&) = default;
};

template <class Field>
BaseMatrix<Field> base_identity(const Field& f, std::size_t n) {
  BaseMatrix<Field> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class Field>
BaseMatrix<Field> base_mul(const Field& f, const BaseMatrix<Field>& a, const BaseMatrix<Field>& b) {
  if (a.cols != b.rows) throw DimensionMismatch("base matrix product: inner dimensions differ");
  BaseMatrix<Field> r(a.rows, b.cols, f.zero());
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& x = a.at(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(x, b.at(k, j)));
    }
  }
  return r;
}

template <class Field>
struct Echelon {
  BaseMatrix<Field> reduced;         // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each non-zero row
};

// Gauss–Jordan elimination. If `companion` is given, the same row operations
// are applied to it (used for inversion and solving).
template <class Field>
Echelon<Field> row_reduce(const Field& f, BaseMatrix<Field> m, BaseMatrix<Field>* companion = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pr = row;
    while (pr < m.rows && f.is_zero(m.at(pr, col))) ++pr;
    if (pr == m.rows) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
      if (companion) {
        for (std::size_t j = 0; j < companion->cols; ++j) std::swap(companion->at(pr, j), companion->at(row, j));
      }
    }
    const auto inv = f.inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(inv, m.at(row, j));
    if (companion) {
      for (std::size_t j = 0; j < companion->cols; ++j) companion->at(row, j) = f.mul(inv, companion->at(row, j));
    }
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const auto factor = m.at(r, col);
      for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(row, j)));
      if (companion) {
        for (std::size_t j = 0; j < companion->cols; ++j) {
          companion->at(r, j) = f.sub(companion->at(r, j), f.mul(factor, companion->at(row, j)));
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t base_rank(const Field& f, const BaseMatrix<Field>& m) {
  return row_reduce(f, m).pivots.size();
}

template <class Field>
std::optional<BaseMatrix<Field>> base_inverse(const Field& f, const BaseMatrix<Field>& m) {
  if (m.rows != m.cols) throw DimensionMismatch("only square matrices can be inverted");
  BaseMatrix<Field> inv = base_identity(f, m.rows);
  auto e = row_reduce(f, m, &inv);
  if (e.pivots.size() != m.rows) return std::nullopt;
  return inv;
}

// One solution x of m·x = b (b a column), or nullopt if inconsistent.
template <class Field>
std::optional<std::vector<typename Field::Elem>> base_solve(const Field& f, const BaseMatrix<Field>& m,
                                                            const std::vector<typename Field::Elem>& b) {
  if (b.size() != m.rows) throw DimensionMismatch("right-hand side has wrong length");
  BaseMatrix<Field> rhs(m.rows, 1, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i) rhs.at(i, 0) = b[i];
  auto e = row_reduce(f, m, &rhs);
  for (std::size_t r = e.pivots.size(); r < m.rows; ++r) {
    if (!f.is_zero(rhs.at(r, 0))) return std::nullopt;
  }
  std::vector<typename Field::Elem> x(m.cols, f.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = rhs.at(r, 0);
  return x;
}

template <class Field>
struct Nullspace {
  // basis[t] has a one at free_positions[t] and zeros at the other free positions.
  std::vector<std::vector<typename Field::Elem>> basis;
  std::vector<std::size_t> free_positions;
};

template <class Field>
Nullspace<Field> base_nullspace(const Field& f, const BaseMatrix<Field>& m) {
  auto e = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Nullspace<Field> ns;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Elem> v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced.at(r, free));
    ns.basis.push_back(std::move(v));
    ns.free_positions.push_back(free);
  }
  return ns;
}

}  // namespace hermcat::algebra
