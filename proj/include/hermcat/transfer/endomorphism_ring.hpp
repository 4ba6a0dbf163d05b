#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hermcat/algebra/base_matrix.hpp"
#include "hermcat/algebra/present.hpp"
#include "hermcat/algebra/validate.hpp"
#include "hermcat/double_arrow/category.hpp"
#include "hermcat/forms/system.hpp"

namespace hermcat::transfer {

using algebra::AlgebraData;
using algebra::InvolutiveAlgebra;
using algebra::MatrixOver;
using double_arrow::DAMorphism;
using double_arrow::DAObject;
using double_arrow::HermitianDAForm;
using forms::SesquilinearSystem;

using algebra::present_algebra;

template <InvolutiveAlgebra A>
using PresentedAlgebra = algebra::PresentedOver<typename A::Field>;

// An object M of a hermitian category of matrices with a unimodular ε₀-hermitian
// form h₀: M → M*. Morphisms are stored as DAMorphism pairs; for a plain free
// module only `phi` is used and `psi` is empty.
template <InvolutiveAlgebra A>
struct Ambient {
  enum class Kind { FreeModule, DoubleArrow };

  Kind kind = Kind::FreeModule;
  A algebra;
  DAObject<A> object;  // for a free module A^r: m = r, n = 0, no arrows
  DAMorphism<A> h0;    // free module: phi = left adjoint of the Gram; double arrow: (ξ₁, ξ₂)
  int epsilon0 = 1;

  std::size_t rank() const { return object.m; }
};

// Free module A^r with h₀ the left adjoint S₀^† of an ε₀-hermitian Gram S₀.
template <InvolutiveAlgebra A>
Ambient<A> free_module_ambient(const SesquilinearSystem<A>& s0, int epsilon0) {
  if (s0.index_count() != 1) throw InvalidInput("the ambient form must be a single form");
  if (!forms::is_epsilon_hermitian(s0, epsilon0)) throw InvalidInput("the ambient form is not epsilon-hermitian");
  if (!forms::is_unimodular(s0)) throw InvalidInput("the ambient form is not unimodular");
  const auto& alg = s0.algebra;
  DAObject<A> obj{alg, s0.rank, 0, {}};
  return {Ambient<A>::Kind::FreeModule, alg, obj,
          {forms::left_adjoint(s0, 0), algebra::zero_matrix(alg, 0, 0)}, epsilon0};
}

template <InvolutiveAlgebra A>
Ambient<A> double_arrow_ambient(const HermitianDAForm<A>& h0) {
  const auto problems = double_arrow::da_form_violations(h0);
  if (!problems.empty()) throw InvalidInput("the ambient form is not unimodular hermitian: " + problems.front());
  return {Ambient<A>::Kind::DoubleArrow, h0.object.algebra, h0.object, {h0.xi1, h0.xi2}, h0.epsilon};
}

template <InvolutiveAlgebra A>
DAMorphism<A> ambient_identity(const Ambient<A>& amb) {
  return {algebra::identity(amb.algebra, amb.object.m), algebra::identity(amb.algebra, amb.object.n)};
}

// f* composed with h₀ on both sides: σ(f) = h₀⁻¹ f* h₀.
template <InvolutiveAlgebra A>
DAMorphism<A> ambient_involution(const Ambient<A>& amb, const DAMorphism<A>& f) {
  const auto& alg = amb.algebra;
  using algebra::conj_transpose;
  using algebra::mat_invert_or_throw;
  using algebra::mat_mul;
  if (amb.kind == Ambient<A>::Kind::FreeModule) {
    const auto h = amb.h0.phi;
    return {mat_mul(alg, mat_invert_or_throw(alg, h, "h0"), mat_mul(alg, conj_transpose(alg, f.phi), h)), f.psi};
  }
  const auto& x1 = amb.h0.phi;
  const auto& x2 = amb.h0.psi;
  return {mat_mul(alg, mat_invert_or_throw(alg, x1, "h0"), mat_mul(alg, conj_transpose(alg, f.psi), x1)),
          mat_mul(alg, mat_invert_or_throw(alg, x2, "h0"), mat_mul(alg, conj_transpose(alg, f.phi), x2))};
}

// Base-field coordinates of a pair of matrices: entries of phi then psi,
// row-major, each entry expanded in the algebra basis.
template <InvolutiveAlgebra A>
std::vector<typename A::Scalar> flatten(const A& alg, const DAMorphism<A>& f) {
  std::vector<typename A::Scalar> out;
  for (const auto* m : {&f.phi, &f.psi}) {
    for (const auto& e : m->entries()) {
      for (const auto& c : alg.coefficients(e)) out.push_back(c);
    }
  }
  return out;
}

template <InvolutiveAlgebra A>
DAMorphism<A> unflatten(const A& alg, std::size_t m_rows, std::size_t m_cols, std::size_t n_rows, std::size_t n_cols,
                        const std::vector<typename A::Scalar>& coords) {
  const std::size_t d = static_cast<std::size_t>(alg.dim());
  if (coords.size() != (m_rows * m_cols + n_rows * n_cols) * d) throw DimensionMismatch("coordinate vector has wrong length");
  DAMorphism<A> f{algebra::zero_matrix(alg, m_rows, m_cols), algebra::zero_matrix(alg, n_rows, n_cols)};
  std::size_t pos = 0;
  for (auto* m : {&f.phi, &f.psi}) {
    for (auto& e : m->entries()) {
      std::vector<typename A::Scalar> c(coords.begin() + pos, coords.begin() + pos + d);
      e = alg.from_coefficients(c);
      pos += d;
    }
  }
  return f;
}

// Basis over the base field of Hom(source, target) in the double-arrow
// category (all intertwining pairs, not only isomorphisms). For free modules
// pass objects with n = 0 and no arrows.
template <InvolutiveAlgebra A>
std::vector<DAMorphism<A>> hom_basis(const DAObject<A>& source, const DAObject<A>& target,
                                     std::vector<std::size_t>* free_positions = nullptr) {
  const auto& alg = source.algebra;
  const auto& field = alg.field();
  if (source.index_count() != target.index_count()) throw DimensionMismatch("objects have different index sets");
  const std::size_t d = static_cast<std::size_t>(alg.dim());
  const std::size_t unknowns = (target.m * source.m + target.n * source.n) * d;
  // Column t holds the residuals (ψF_i − F′_iφ, ψG_i − G′_iφ) of the t-th unit coordinate vector.
  std::vector<std::vector<typename A::Scalar>> columns;
  for (std::size_t t = 0; t < unknowns; ++t) {
    std::vector<typename A::Scalar> unit(unknowns, field.zero());
    unit[t] = field.one();
    const auto f = unflatten(alg, target.m, source.m, target.n, source.n, unit);
    std::vector<typename A::Scalar> residual;
    for (std::size_t i = 0; i < source.index_count(); ++i) {
      for (int which = 0; which < 2; ++which) {
        const auto& a = which == 0 ? source.arrows[i].first : source.arrows[i].second;
        const auto& b = which == 0 ? target.arrows[i].first : target.arrows[i].second;
        const auto r = algebra::mat_sub(alg, algebra::mat_mul(alg, f.psi, a), algebra::mat_mul(alg, b, f.phi));
        for (const auto& e : r.entries()) {
          for (const auto& c : alg.coefficients(e)) residual.push_back(c);
        }
      }
    }
    columns.push_back(std::move(residual));
  }
  const std::size_t equations = columns.empty() ? 0 : columns.front().size();
  algebra::BaseMatrix<typename A::Field> system(equations, unknowns, field.zero());
  for (std::size_t t = 0; t < unknowns; ++t) {
    for (std::size_t r = 0; r < equations; ++r) system.at(r, t) = columns[t][r];
  }
  const auto ns = algebra::base_nullspace(field, system);
  std::vector<DAMorphism<A>> basis;
  for (const auto& v : ns.basis) basis.push_back(unflatten(alg, target.m, source.m, target.n, source.n, v));
  if (free_positions) *free_positions = ns.free_positions;
  return basis;
}

// End(M) as an algebra over the base field, with the involution induced by h₀.
template <InvolutiveAlgebra A>
struct EndomorphismRing {
  using Presented = PresentedAlgebra<A>;

  Ambient<A> ambient;
  std::vector<DAMorphism<A>> basis;
  std::vector<std::size_t> free_positions;  // basis[t] has coordinate 1 here, others 0
  AlgebraData<typename A::Field> data;
  Presented algebra;

  std::size_t dim() const { return basis.size(); }

  // Coordinates in `basis`; throws InvalidInput if f is not an endomorphism.
  std::vector<typename A::Scalar> coordinates(const DAMorphism<A>& f) const {
    const auto flat = flatten(ambient.algebra, f);
    std::vector<typename A::Scalar> c;
    for (auto p : free_positions) c.push_back(flat.at(p));
    if (!(combine(c) == f)) throw InvalidInput("not an endomorphism of the ambient object");
    return c;
  }

  DAMorphism<A> combine(const std::vector<typename A::Scalar>& c) const {
    const auto& alg = ambient.algebra;
    DAMorphism<A> f{algebra::zero_matrix(alg, ambient.object.m, ambient.object.m),
                    algebra::zero_matrix(alg, ambient.object.n, ambient.object.n)};
    for (std::size_t t = 0; t < basis.size(); ++t) {
      const auto s = alg.embed(c[t]);
      f.phi = algebra::mat_add(alg, f.phi, algebra::scale_left(alg, s, basis[t].phi));
      f.psi = algebra::mat_add(alg, f.psi, algebra::scale_left(alg, s, basis[t].psi));
    }
    return f;
  }

  typename Presented::Element to_element(const DAMorphism<A>& f) const {
    return algebra.from_coefficients(coordinates(f));
  }
  DAMorphism<A> from_element(const typename Presented::Element& x) const { return combine(algebra.coefficients(x)); }
};

// Solves the intertwining system for End(M), then records composition and
// σ(f) = h₀⁻¹ f* h₀ in the resulting basis.
template <InvolutiveAlgebra A>
EndomorphismRing<A> endomorphism_ring(const Ambient<A>& amb) {
  const auto& alg = amb.algebra;
  const auto& field = alg.field();
  std::vector<std::size_t> free_positions;
  auto basis = hom_basis(amb.object, amb.object, &free_positions);
  const std::size_t dim = basis.size();
  if (dim == 0) throw InvalidInput("the ambient object is zero");

  AlgebraData<typename A::Field> data{field, static_cast<int>(dim), {}, {}, {}};
  auto coords = [&](const DAMorphism<A>& f) {
    const auto flat = flatten(alg, f);
    std::vector<typename A::Scalar> c;
    for (auto p : free_positions) c.push_back(flat[p]);
    return c;
  };
  data.structure.assign(dim * dim * dim, field.zero());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto c = coords(double_arrow::compose(alg, basis[i], basis[j]));
      for (std::size_t k = 0; k < dim; ++k) data.structure[(i * dim + j) * dim + k] = c[k];
    }
  }
  data.unit = coords(ambient_identity(amb));
  data.involution.assign(dim * dim, field.zero());
  for (std::size_t j = 0; j < dim; ++j) {
    const auto c = coords(ambient_involution(amb, basis[j]));
    for (std::size_t i = 0; i < dim; ++i) data.involution[i * dim + j] = c[i];
  }
  auto presented = present_algebra(data);
  return {amb, std::move(basis), std::move(free_positions), std::move(data), std::move(presented)};
}

}  // namespace hermcat::transfer
