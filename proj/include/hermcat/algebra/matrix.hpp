#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hermcat/algebra/base_matrix.hpp"
#include "hermcat/algebra/concepts.hpp"
#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

// Row-major matrix of algebra elements. Arithmetic lives in free functions that
// take the algebra as first argument, since elements carry no algebra pointer.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const auto& entries() const { return data_; }
  auto& entries() { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  boost::container::small_vector<E, 16> data_;
};

template <class A>
using MatrixOver = Matrix<typename A::Element>;

template <InvolutiveAlgebra A>
bool same_algebra(const A& x, const A& y) {
  return &x.data() == &y.data() || x.data() == y.data();
}

template <InvolutiveAlgebra A>
MatrixOver<A> zero_matrix(const A& alg, std::size_t rows, std::size_t cols) {
  return MatrixOver<A>(rows, cols, alg.zero());
}

template <InvolutiveAlgebra A>
MatrixOver<A> identity(const A& alg, std::size_t n) {
  auto m = zero_matrix(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = alg.one();
  return m;
}

// Builds a matrix from rows of integers, each embedded as a multiple of 1_A.
template <InvolutiveAlgebra A>
MatrixOver<A> int_matrix(const A& alg, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  auto m = zero_matrix(alg, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = alg.from_int(v);
    ++i;
  }
  return m;
}

template <InvolutiveAlgebra A>
MatrixOver<A> scalar_matrix(const A& alg, std::size_t n, const typename A::Element& a) {
  auto m = zero_matrix(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
  return m;
}

template <class E>
void require_same_shape(const Matrix<E>& x, const Matrix<E>& y, const char* what) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch(std::string(what) + ": shapes differ");
}

template <InvolutiveAlgebra A>
MatrixOver<A> mat_add(const A& alg, const MatrixOver<A>& x, const MatrixOver<A>& y) {
  require_same_shape(x, y, "matrix sum");
  MatrixOver<A> r = x;
  for (std::size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = alg.add(x.entries()[i], y.entries()[i]);
  return r;
}

template <InvolutiveAlgebra A>
MatrixOver<A> mat_sub(const A& alg, const MatrixOver<A>& x, const MatrixOver<A>& y) {
  require_same_shape(x, y, "matrix difference");
  MatrixOver<A> r = x;
  for (std::size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = alg.sub(x.entries()[i], y.entries()[i]);
  return r;
}

template <InvolutiveAlgebra A>
MatrixOver<A> mat_neg(const A& alg, const MatrixOver<A>& x) {
  MatrixOver<A> r = x;
  for (auto& e : r.entries()) e = alg.neg(e);
  return r;
}

template <InvolutiveAlgebra A>
MatrixOver<A> mat_mul(const A& alg, const MatrixOver<A>& x, const MatrixOver<A>& y) {
  if (x.cols() != y.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  auto r = zero_matrix(alg, x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const auto& a = x(i, k);
      if (alg.is_zero(a)) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) = alg.add(r(i, j), alg.mul(a, y(k, j)));
    }
  }
  return r;
}

template <InvolutiveAlgebra A>
MatrixOver<A> scale_left(const A& alg, const typename A::Element& a, const MatrixOver<A>& x) {
  MatrixOver<A> r = x;
  for (auto& e : r.entries()) e = alg.mul(a, e);
  return r;
}

template <InvolutiveAlgebra A>
MatrixOver<A> scale_right(const A& alg, const MatrixOver<A>& x, const typename A::Element& a) {
  MatrixOver<A> r = x;
  for (auto& e : r.entries()) e = alg.mul(e, a);
  return r;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& x) {
  Matrix<E> r(x.cols(), x.rows(), x.rows() * x.cols() == 0 ? E{} : x(0, 0));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) r(j, i) = x(i, j);
  }
  return r;
}

// σ applied entrywise to the transpose.
template <InvolutiveAlgebra A>
MatrixOver<A> conj_transpose(const A& alg, const MatrixOver<A>& x) {
  auto r = zero_matrix(alg, x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) r(j, i) = alg.conj(x(i, j));
  }
  return r;
}

template <class E>
Matrix<E> submatrix(const Matrix<E>& x, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > x.rows() || c0 + cols > x.cols()) throw DimensionMismatch("submatrix out of range");
  Matrix<E> r(rows, cols, E{});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = x(r0 + i, c0 + j);
  }
  return r;
}

template <class E>
void set_block(Matrix<E>& target, std::size_t r0, std::size_t c0, const Matrix<E>& block) {
  if (r0 + block.rows() > target.rows() || c0 + block.cols() > target.cols()) {
    throw DimensionMismatch("block does not fit");
  }
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) target(r0 + i, c0 + j) = block(i, j);
  }
}

template <InvolutiveAlgebra A>
MatrixOver<A> block_diagonal(const A& alg, const MatrixOver<A>& x, const MatrixOver<A>& y) {
  auto r = zero_matrix(alg, x.rows() + y.rows(), x.cols() + y.cols());
  set_block(r, 0, 0, x);
  set_block(r, x.rows(), x.cols(), y);
  return r;
}

// 2×2 block matrix [[a, b], [c, d]].
template <InvolutiveAlgebra A>
MatrixOver<A> from_blocks(const A& alg, const MatrixOver<A>& a, const MatrixOver<A>& b, const MatrixOver<A>& c,
                          const MatrixOver<A>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionMismatch("block matrix: incompatible block shapes");
  }
  auto r = zero_matrix(alg, a.rows() + c.rows(), a.cols() + b.cols());
  set_block(r, 0, 0, a);
  set_block(r, 0, a.cols(), b);
  set_block(r, a.rows(), 0, c);
  set_block(r, a.rows(), a.cols(), d);
  return r;
}

template <InvolutiveAlgebra A>
bool is_zero_matrix(const A& alg, const MatrixOver<A>& x) {
  for (const auto& e : x.entries()) {
    if (!alg.is_zero(e)) return false;
  }
  return true;
}

// Left multiplication by X on A^cols as a base-field matrix of size
// (rows·m) × (cols·m); block (i, j) is the matrix of a ↦ X(i,j)·a.
template <InvolutiveAlgebra A>
BaseMatrix<typename A::Field> regular_representation(const A& alg, const MatrixOver<A>& x) {
  const std::size_t m = static_cast<std::size_t>(alg.dim());
  const auto& f = alg.field();
  BaseMatrix<typename A::Field> r(x.rows() * m, x.cols() * m, f.zero());
  std::vector<typename A::Element> basis;
  for (std::size_t k = 0; k < m; ++k) basis.push_back(alg.basis(static_cast<int>(k)));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (alg.is_zero(x(i, j))) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const auto col = alg.coefficients(alg.mul(x(i, j), basis[k]));
        for (std::size_t l = 0; l < m; ++l) r.at(i * m + l, j * m + k) = col[l];
      }
    }
  }
  return r;
}

// Base-field rank of the regular representation; X is injective on A^cols iff
// this equals cols·dim.
template <InvolutiveAlgebra A>
std::size_t module_rank(const A& alg, const MatrixOver<A>& x) {
  return base_rank(alg.field(), regular_representation(alg, x));
}

template <InvolutiveAlgebra A>
bool is_invertible(const A& alg, const MatrixOver<A>& x) {
  if (!x.is_square()) throw DimensionMismatch("only square matrices can be inverted");
  return module_rank(alg, x) == x.rows() * static_cast<std::size_t>(alg.dim());
}

// Two-sided inverse through the regular representation, or nullopt.
template <InvolutiveAlgebra A>
std::optional<MatrixOver<A>> mat_invert(const A& alg, const MatrixOver<A>& x) {
  if (!x.is_square()) throw DimensionMismatch("only square matrices can be inverted");
  const std::size_t n = x.rows();
  const std::size_t m = static_cast<std::size_t>(alg.dim());
  auto rr_inv = base_inverse(alg.field(), regular_representation(alg, x));
  if (!rr_inv) return std::nullopt;
  // Column j of the inverse is the preimage of the j-th unit vector.
  const auto unit = alg.coefficients(alg.one());
  auto y = zero_matrix(alg, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<typename A::Scalar> c(m, alg.field().zero());
      for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t k = 0; k < m; ++k) {
          c[l] = alg.field().add(c[l], alg.field().mul(rr_inv->at(i * m + l, j * m + k), unit[k]));
        }
      }
      y(i, j) = alg.from_coefficients(c);
    }
  }
  return y;
}

template <InvolutiveAlgebra A>
MatrixOver<A> mat_invert_or_throw(const A& alg, const MatrixOver<A>& x, const char* what = "matrix") {
  auto y = mat_invert(alg, x);
  if (!y) throw NotInvertible(std::string(what) + " is not invertible");
  return *y;
}

}  // namespace hermcat::algebra
