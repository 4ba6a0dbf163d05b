#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#include "hermcat/algebra/finite_algebra.hpp"
#include "hermcat/algebra/matrix.hpp"
#include "hermcat/support/budget.hpp"

namespace hermcat::algebra {

template <class A>
concept EnumerableAlgebra = FiniteInvolutiveAlgebra<A>;

template <class A>
void require_finite(const A&, const char* what) {
  if constexpr (!A::is_finite) {
    throw InfiniteBase(std::string(what) + " needs a finite base field");
  }
}

// All elements in lexicographic order of coefficient vectors.
template <EnumerableAlgebra A>
std::vector<typename A::Element> enumerate_elements(const A& alg) {
  std::vector<typename A::Element> out;
  out.reserve(alg.size());
  for (std::uint64_t i = 0; i < alg.size(); ++i) out.push_back(alg.element(i));
  return out;
}

template <InvolutiveAlgebra A>
std::vector<typename A::Element> enumerate_elements(const A& alg)
  requires(!A::is_finite)
{
  require_finite(alg, "element enumeration");
  return {};
}

// The matrix whose row-major entry list, read as a base-|A| numeral with the
// first entry most significant, equals `index`.
template <EnumerableAlgebra A>
MatrixOver<A> matrix_from_index(const A& alg, std::size_t rows, std::size_t cols, std::uint64_t index) {
  auto m = zero_matrix(alg, rows, cols);
  auto& e = m.entries();
  for (std::size_t k = e.size(); k-- > 0;) {
    e[k] = alg.element(index % alg.size());
    index /= alg.size();
  }
  return m;
}

template <EnumerableAlgebra A>
std::uint64_t matrix_index(const A& alg, const MatrixOver<A>& m) {
  std::uint64_t index = 0;
  for (const auto& e : m.entries()) index = index * alg.size() + alg.index(e);
  return index;
}

// Invertibility with shortcuts for the table-driven model: units of A for 1×1,
// and determinants for small matrices over commutative algebras.
template <InvolutiveAlgebra A>
bool is_invertible_fast(const A& alg, const MatrixOver<A>& x) {
  if constexpr (std::is_same_v<A, FiniteAlgebra>) {
    if (!x.is_square()) throw DimensionMismatch("only square matrices can be inverted");
    const std::size_t n = x.rows();
    if (n == 0) return true;
    if (n == 1) return alg.is_unit(x(0, 0));
    if (alg.is_commutative() && n == 2) {
      return alg.is_unit(alg.sub(alg.mul(x(0, 0), x(1, 1)), alg.mul(x(0, 1), x(1, 0))));
    }
  }
  return is_invertible(alg, x);
}

// Invertible n×n matrices in lexicographic order of their entry lists.
template <EnumerableAlgebra A>
std::vector<MatrixOver<A>> enumerate_units(const A& alg, std::size_t n, Budget& budget = Budget::unlimited()) {
  const std::uint64_t count = saturating_pow(alg.size(), n * n);
  budget.require(count, "unit enumeration");
  std::vector<MatrixOver<A>> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto m = matrix_from_index(alg, n, n, i);
    if (is_invertible_fast(alg, m)) out.push_back(std::move(m));
  }
  budget.charge(count, "unit enumeration");
  return out;
}

template <InvolutiveAlgebra A>
std::vector<MatrixOver<A>> enumerate_units(const A& alg, std::size_t, Budget& = Budget::unlimited())
  requires(!A::is_finite)
{
  require_finite(alg, "unit enumeration");
  return {};
}

}  // namespace hermcat::algebra
