#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermcat/algebra/algebra_data.hpp"
#include "hermcat/algebra/coefficient_algebra.hpp"
#include "hermcat/algebra/finite_algebra.hpp"
#include "hermcat/algebra/finite_field.hpp"
#include "hermcat/algebra/rational_field.hpp"

namespace hermcat::algebra {

// K itself with the identity involution.
template <class Field>
AlgebraData<Field> base_field_data(const Field& k) {
  return {k, 1, {k.one()}, {k.one()}, {k.one()}};
}

// M_n(K) with σ(X) = Xᵗ. Basis E_{rc} at index r·n + c.
template <class Field>
AlgebraData<Field> matrix_algebra_data(const Field& k, int n) {
  const int m = n * n;
  AlgebraData<Field> d{k, m, std::vector(static_cast<std::size_t>(m) * m * m, k.zero()),
                       std::vector(static_cast<std::size_t>(m), k.zero()),
                       std::vector(static_cast<std::size_t>(m) * m, k.zero())};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      for (int c2 = 0; c2 < n; ++c2) {
        // E_{rc}·E_{c c2} = E_{r c2}
        d.structure[(static_cast<std::size_t>(r * n + c) * m + (c * n + c2)) * m + (r * n + c2)] = k.one();
      }
      d.involution[static_cast<std::size_t>(c * n + r) * m + (r * n + c)] = k.one();
    }
    d.unit[r * n + r] = k.one();
  }
  return d;
}

// The quaternion algebra (a, b)_K, basis 1, i, j, k with i² = a, j² = b,
// ij = −ji = k, and the canonical involution fixing 1 and negating i, j, k.
template <class Field>
AlgebraData<Field> quaternion_data(const Field& k, const typename Field::Elem& a, const typename Field::Elem& b) {
  AlgebraData<Field> d{k, 4, std::vector(64, k.zero()), {k.one(), k.zero(), k.zero(), k.zero()},
                       std::vector(16, k.zero())};
  auto set = [&](int i, int j, int out, const typename Field::Elem& coeff) {
    d.structure[(static_cast<std::size_t>(i) * 4 + j) * 4 + out] = coeff;
  };
  const auto one = k.one();
  const auto ab = k.mul(a, b);
  for (int x = 0; x < 4; ++x) {
    set(0, x, x, one);
    set(x, 0, x, one);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, k.neg(ab));
  set(1, 2, 3, one);
  set(2, 1, 3, k.neg(one));
  set(1, 3, 2, a);
  set(3, 1, 2, k.neg(a));
  set(2, 3, 1, k.neg(b));
  set(3, 2, 1, b);
  d.involution[0] = one;
  for (int x = 1; x < 4; ++x) d.involution[x * 4 + x] = k.neg(one);
  return d;
}

// K × K with the exchange involution (x, y) ↦ (y, x).
template <class Field>
AlgebraData<Field> split_quadratic_data(const Field& k) {
  AlgebraData<Field> d{k, 2, std::vector(8, k.zero()), {k.one(), k.one()}, {k.zero(), k.one(), k.one(), k.zero()}};
  d.structure[(0 * 2 + 0) * 2 + 0] = k.one();
  d.structure[(1 * 2 + 1) * 2 + 1] = k.one();
  return d;
}

// 𝔽_p[t]/(modulus) as an algebra over 𝔽_p with basis 1, t, …, t^{e−1}.
// With frobenius = true (degree 2 only) σ is x ↦ x^p, otherwise the identity.
AlgebraData<FiniteField> field_extension_data(std::uint32_t p, const std::vector<std::uint32_t>& modulus,
                                              bool frobenius);

// ℚ(√d) as a two-dimensional ℚ-algebra with basis 1, √d and σ(√d) = −√d.
AlgebraData<RationalField> quadratic_conjugation_data(const Rational& d);

// Convenience constructors for the algebras used throughout the tests.
FiniteAlgebra prime_field_algebra(std::uint32_t p);
// 𝔽₉ = 𝔽₃[t]/(t² + 1) over 𝔽₃ with the Frobenius involution.
FiniteAlgebra gf9_frobenius();
// 𝔽_{p²} = 𝔽_p[t]/(first irreducible quadratic) with the Frobenius involution.
FiniteAlgebra quadratic_frobenius_algebra(std::uint32_t p);
RationalAlgebra rational_algebra();

struct ShippedAlgebra {
  std::string name;
  std::string description;
};

// Names accepted by shipped_finite / shipped_rational, in a fixed order.
std::vector<ShippedAlgebra> shipped_algebra_names();
bool is_rational_shipped(const std::string& name);
FiniteAlgebra shipped_finite(const std::string& name);
RationalAlgebra shipped_rational(const std::string& name);

}  // namespace hermcat::algebra
