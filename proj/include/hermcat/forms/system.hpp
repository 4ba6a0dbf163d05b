#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/algebra/matrix.hpp"

namespace hermcat::forms {

using algebra::InvolutiveAlgebra;
using algebra::EnumerableAlgebra;
using algebra::MatrixOver;

// A free module A^rank with a family of sesquilinear forms
//   s_i(x, y) = x^† S_i y,  x, y column vectors.
// A single form is the case of one Gram matrix.
template <InvolutiveAlgebra A>
struct SesquilinearSystem {
  A algebra;
  std::size_t rank = 0;
  std::vector<MatrixOver<A>> grams;

  std::size_t index_count() const { return grams.size(); }
  const MatrixOver<A>& gram(std::size_t i = 0) const { return grams.at(i); }

  friend bool operator==(const SesquilinearSystem& a, const SesquilinearSystem& b) {
    return a.rank == b.rank && a.grams == b.grams && algebra::same_algebra(a.algebra, b.algebra);
  }
};

// Homomorphism A^source → A^target given by a target × source matrix.
template <InvolutiveAlgebra A>
using ModuleMap = MatrixOver<A>;

template <InvolutiveAlgebra A>
SesquilinearSystem<A> make_system(const A& alg, std::size_t rank, std::vector<MatrixOver<A>> grams) {
  if (grams.empty()) throw DimensionMismatch("a system needs at least one Gram matrix");
  for (const auto& g : grams) {
    if (g.rows() != rank || g.cols() != rank) {
      throw DimensionMismatch("Gram matrix must be " + std::to_string(rank) + "x" + std::to_string(rank));
    }
  }
  return {alg, rank, std::move(grams)};
}

template <InvolutiveAlgebra A>
SesquilinearSystem<A> make_form(const A& alg, MatrixOver<A> gram) {
  const std::size_t n = gram.rows();
  std::vector<MatrixOver<A>> grams;
  grams.push_back(std::move(gram));
  return make_system(alg, n, std::move(grams));
}

template <InvolutiveAlgebra A>
SesquilinearSystem<A> zero_system(const A& alg, std::size_t rank, std::size_t index_count) {
  return make_system(alg, rank, std::vector<MatrixOver<A>>(index_count, algebra::zero_matrix(alg, rank, rank)));
}

// Diagonal form ⟨d₀, …⟩ with integer entries embedded in A.
template <InvolutiveAlgebra A>
SesquilinearSystem<A> diagonal_form(const A& alg, std::initializer_list<long> entries) {
  auto g = algebra::zero_matrix(alg, entries.size(), entries.size());
  std::size_t i = 0;
  for (long v : entries) {
    g(i, i) = alg.from_int(v);
    ++i;
  }
  return make_form(alg, std::move(g));
}

template <InvolutiveAlgebra A>
void require_index(const SesquilinearSystem<A>& form, std::size_t i) {
  if (i >= form.index_count()) throw DimensionMismatch("form index out of range");
}

template <InvolutiveAlgebra A>
void require_compatible(const SesquilinearSystem<A>& a, const SesquilinearSystem<A>& b, const char* what) {
  if (!algebra::same_algebra(a.algebra, b.algebra)) throw InvalidInput(std::string(what) + ": algebras differ");
  if (a.index_count() != b.index_count()) throw DimensionMismatch(std::string(what) + ": index sets differ");
}

// s_i(x, y) = Σ σ(x_k) S_i(k, l) y_l
template <InvolutiveAlgebra A>
typename A::Element evaluate(const SesquilinearSystem<A>& form, std::size_t i,
                             const std::vector<typename A::Element>& x, const std::vector<typename A::Element>& y) {
  require_index(form, i);
  if (x.size() != form.rank || y.size() != form.rank) throw DimensionMismatch("vector length differs from rank");
  const auto& alg = form.algebra;
  const auto& s = form.grams[i];
  auto total = alg.zero();
  for (std::size_t k = 0; k < form.rank; ++k) {
    if (alg.is_zero(x[k])) continue;
    const auto xk = alg.conj(x[k]);
    for (std::size_t l = 0; l < form.rank; ++l) total = alg.add(total, alg.mul(alg.mul(xk, s(k, l)), y[l]));
  }
  return total;
}

// s_l(x) = s(x, −), stored as the column L·x with s(x, y) = (L·x)^† y; L = S^†.
template <InvolutiveAlgebra A>
ModuleMap<A> left_adjoint(const SesquilinearSystem<A>& form, std::size_t i = 0) {
  require_index(form, i);
  return algebra::conj_transpose(form.algebra, form.grams[i]);
}

// s_r(x)(y) = σ(s(y, x)); its matrix is S itself.
template <InvolutiveAlgebra A>
ModuleMap<A> right_adjoint(const SesquilinearSystem<A>& form, std::size_t i = 0) {
  require_index(form, i);
  return form.grams[i];
}

// Dual map f*: W* → V* of f: V → W under the stored-column convention.
template <InvolutiveAlgebra A>
ModuleMap<A> dual_map(const A& alg, const ModuleMap<A>& f) {
  return algebra::conj_transpose(alg, f);
}

template <InvolutiveAlgebra A>
bool is_epsilon_hermitian(const SesquilinearSystem<A>& form, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be 1 or -1");
  const auto& alg = form.algebra;
  const auto eps = alg.from_int(epsilon);
  for (const auto& s : form.grams) {
    for (std::size_t r = 0; r < form.rank; ++r) {
      for (std::size_t c = r; c < form.rank; ++c) {
        if (alg.conj(s(c, r)) != alg.mul(eps, s(r, c))) return false;
      }
    }
  }
  return true;
}

template <InvolutiveAlgebra A>
bool is_unimodular(const SesquilinearSystem<A>& form) {
  for (const auto& s : form.grams) {
    if (!algebra::is_invertible_fast(form.algebra, s)) return false;
  }
  return true;
}

template <InvolutiveAlgebra A>
SesquilinearSystem<A> orthogonal_sum(const SesquilinearSystem<A>& a, const SesquilinearSystem<A>& b) {
  require_compatible(a, b, "orthogonal sum");
  std::vector<MatrixOver<A>> grams;
  for (std::size_t i = 0; i < a.index_count(); ++i) {
    grams.push_back(algebra::block_diagonal(a.algebra, a.grams[i], b.grams[i]));
  }
  return {a.algebra, a.rank + b.rank, std::move(grams)};
}

// Grams P^† S_i P, without checking P.
template <InvolutiveAlgebra A>
SesquilinearSystem<A> pullback(const SesquilinearSystem<A>& form, const ModuleMap<A>& p) {
  if (p.rows() != form.rank) throw DimensionMismatch("map target rank differs from form rank");
  const auto& alg = form.algebra;
  const auto pt = algebra::conj_transpose(alg, p);
  std::vector<MatrixOver<A>> grams;
  for (const auto& s : form.grams) grams.push_back(algebra::mat_mul(alg, pt, algebra::mat_mul(alg, s, p)));
  return {alg, p.cols(), std::move(grams)};
}

// The form transported along an invertible P: Grams P^† S_i P.
template <InvolutiveAlgebra A>
SesquilinearSystem<A> transform(const SesquilinearSystem<A>& form, const ModuleMap<A>& p) {
  if (!p.is_square() || p.rows() != form.rank) throw DimensionMismatch("transform needs a square matrix of the form's rank");
  if (!algebra::is_invertible_fast(form.algebra, p)) throw NotInvertible("transform matrix is not invertible");
  return pullback(form, p);
}

// P^† S_i(b) P = S_i(a) for every i.
template <InvolutiveAlgebra A>
bool is_isometry(const SesquilinearSystem<A>& a, const SesquilinearSystem<A>& b, const ModuleMap<A>& p) {
  if (p.rows() != b.rank || p.cols() != a.rank || a.rank != b.rank) return false;
  if (!algebra::is_invertible_fast(a.algebra, p)) return false;
  return pullback(b, p).grams == a.grams;
}

}  // namespace hermcat::forms
