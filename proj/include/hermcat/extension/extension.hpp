#pragma once

#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "hermcat/algebra/finite_field.hpp"
#include "hermcat/algebra/present.hpp"
#include "hermcat/algebra/rational_field.hpp"
#include "hermcat/algebra/validate.hpp"
#include "hermcat/double_arrow/category.hpp"
#include "hermcat/forms/system.hpp"

namespace hermcat::extension {

using algebra::AlgebraData;
using algebra::FiniteField;
using algebra::InvolutiveAlgebra;
using algebra::MatrixOver;
using algebra::Rational;
using algebra::RationalField;
using forms::SesquilinearSystem;

// L = K[x]/(modulus) over a prime field 𝔽_p or over ℚ (degree ≤ 2).
template <class Field>
struct FieldExtension {
  Field base;
  Field field;
  int degree = 1;
  // Monic, lowest degree first, coefficients in the base.
  std::vector<typename Field::Elem> modulus;

  typename Field::Elem embed(const typename Field::Elem& c) const {
    if constexpr (std::is_same_v<Field, FiniteField>) {
      return field.from_int(c);  // prime-field codes are the residues themselves
    } else {
      return field.from_rational(c.a);
    }
  }
};

using FiniteExtension = FieldExtension<FiniteField>;
using RationalExtension = FieldExtension<RationalField>;

// modulus is monic irreducible over the prime field `base`, lowest degree first.
inline FiniteExtension finite_extension(const FiniteField& base, std::vector<std::uint32_t> modulus) {
  if (!base.is_prime_field()) throw InvalidInput("extensions are taken over prime fields");
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("the modulus must be monic of degree at least 1");
  for (auto c : modulus) {
    if (c >= base.characteristic()) throw InvalidInput("modulus coefficient out of range");
  }
  FiniteField field(base.characteristic(), modulus);  // checks irreducibility
  const int d = static_cast<int>(modulus.size()) - 1;
  return {base, field, d, std::move(modulus)};
}

// The extension of the given degree by the first irreducible polynomial.
inline FiniteExtension finite_extension(const FiniteField& base, int degree) {
  if (degree < 1) throw InvalidInput("the degree must be at least 1");
  return finite_extension(base, algebra::first_irreducible(base.characteristic(), degree));
}

// modulus x − a, or x² + bx + c irreducible over ℚ.
inline RationalExtension rational_extension(const RationalField& base, std::vector<Rational> modulus) {
  if (base.is_quadratic()) throw InvalidInput("extensions are taken over the rationals");
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("the modulus must be monic of degree at least 1");
  std::vector<algebra::QuadNumber> coeffs;
  for (const auto& c : modulus) coeffs.push_back({c, 0});
  if (modulus.size() == 2) return {base, base, 1, std::move(coeffs)};
  if (modulus.size() != 3) throw InvalidInput("rational extensions of degree above 2 are not supported");
  // x² + bx + c = (x + b/2)² − (b²/4 − c)
  const Rational disc = modulus[1] * modulus[1] / 4 - modulus[0];
  if (disc == 0 || algebra::is_rational_square(disc)) throw InvalidInput("the modulus is reducible over the rationals");
  return {base, RationalField::quadratic(disc), 2, std::move(coeffs)};
}

template <class Field>
AlgebraData<Field> extend_data(const AlgebraData<Field>& d, const FieldExtension<Field>& ext) {
  if (!(d.field == ext.base)) throw InvalidInput("the algebra is not defined over the base of the extension");
  AlgebraData<Field> out{ext.field, d.dim, {}, {}, {}};
  for (const auto& c : d.structure) out.structure.push_back(ext.embed(c));
  for (const auto& c : d.unit) out.unit.push_back(ext.embed(c));
  for (const auto& c : d.involution) out.involution.push_back(ext.embed(c));
  return out;
}

// A_L = A ⊗_K L with σ ⊗ id: the same structure constants read over L.
template <InvolutiveAlgebra A>
auto extend_algebra(const A& alg, const FieldExtension<typename A::Field>& ext) {
  return algebra::present_algebra(extend_data(alg.data(), ext));
}

template <InvolutiveAlgebra A>
using ExtendedAlgebra = algebra::PresentedOver<typename A::Field>;

template <InvolutiveAlgebra A, InvolutiveAlgebra L>
typename L::Element extend_element(const A& alg, const L& alg_l, const FieldExtension<typename A::Field>& ext,
                                   const typename A::Element& x) {
  std::vector<typename L::Scalar> c;
  for (const auto& v : alg.coefficients(x)) c.push_back(ext.embed(v));
  return alg_l.from_coefficients(c);
}

template <InvolutiveAlgebra A, InvolutiveAlgebra L>
MatrixOver<L> extend_matrix(const A& alg, const L& alg_l, const FieldExtension<typename A::Field>& ext,
                            const MatrixOver<A>& m) {
  auto out = algebra::zero_matrix(alg_l, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = extend_element(alg, alg_l, ext, m(i, j));
  }
  return out;
}

// (V, (s_i))_L: the Gram entries read in A_L.
template <InvolutiveAlgebra A, InvolutiveAlgebra L>
SesquilinearSystem<L> extend_form(const SesquilinearSystem<A>& form, const L& alg_l,
                                  const FieldExtension<typename A::Field>& ext) {
  std::vector<MatrixOver<L>> grams;
  for (const auto& g : form.grams) grams.push_back(extend_matrix(form.algebra, alg_l, ext, g));
  return forms::make_system(alg_l, form.rank, std::move(grams));
}

template <InvolutiveAlgebra A, InvolutiveAlgebra L>
double_arrow::DAMorphism<L> extend_morphism(const A& alg, const L& alg_l, const FieldExtension<typename A::Field>& ext,
                                            const double_arrow::DAMorphism<A>& f) {
  return {extend_matrix(alg, alg_l, ext, f.phi), extend_matrix(alg, alg_l, ext, f.psi)};
}

}  // namespace hermcat::extension
