#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/forms/classify.hpp"
#include "hermcat/support/budget.hpp"
#include "hermcat/transfer/endomorphism_ring.hpp"

namespace hermcat::transfer {

using algebra::EnumerableAlgebra;

// Q^k as a double-arrow object (k ≥ 1).
template <InvolutiveAlgebra A>
DAObject<A> power_object(const DAObject<A>& q, std::size_t k) {
  if (k == 0) throw InvalidInput("powers start at 1");
  auto out = q;
  for (std::size_t i = 1; i < k; ++i) out = double_arrow::direct_sum(out, q);
  return out;
}

namespace detail {

// Block (r, c) of a morphism M^k → (M*)^{k′} or M^k → M^{k′}, as a pair of matrices.
template <InvolutiveAlgebra A>
DAMorphism<A> block(const DAMorphism<A>& f, std::size_t phi_rows, std::size_t phi_cols, std::size_t psi_rows,
                    std::size_t psi_cols, std::size_t r, std::size_t c) {
  return {algebra::submatrix(f.phi, r * phi_rows, c * phi_cols, phi_rows, phi_cols),
          algebra::submatrix(f.psi, r * psi_rows, c * psi_cols, psi_rows, psi_cols)};
}

template <InvolutiveAlgebra A>
std::size_t power_of(const Ambient<A>& amb, std::size_t rows) {
  const std::size_t unit = amb.object.m;
  if (unit == 0 || rows % unit != 0) throw InvalidInput("the object is not a power of the ambient object");
  return rows / unit;
}

}  // namespace detail

// h: M^k → (M^k)* given by its pair of matrices. Entry (r, c) of the result is
// h₀⁻¹ ∘ h_{rc} ∈ E, the value of the transferred form b(g, g′) = h₀⁻¹ g* h g′ on
// the inclusions of the r-th and c-th copies of M.
template <InvolutiveAlgebra A>
SesquilinearSystem<PresentedAlgebra<A>> transfer_morphism_form(const EndomorphismRing<A>& ring, const DAMorphism<A>& h,
                                                              std::size_t k) {
  const auto& amb = ring.ambient;
  const auto& alg = amb.algebra;
  const std::size_t m = amb.object.m, n = amb.object.n;
  const bool free = amb.kind == Ambient<A>::Kind::FreeModule;
  // Free module: h is (r k) × (r k). Double arrow: ξ₁ is (n k) × (m k), ξ₂ is (m k) × (n k).
  const std::size_t r1 = free ? m : n, c1 = m, r2 = free ? 0 : m, c2 = free ? 0 : n;
  if (h.phi.rows() != r1 * k || h.phi.cols() != c1 * k || h.psi.rows() != r2 * k || h.psi.cols() != c2 * k) {
    throw InvalidInput("the form does not live on a power of the ambient object");
  }
  const auto inv1 = algebra::mat_invert_or_throw(alg, amb.h0.phi, "h0");
  const auto inv2 = free ? amb.h0.psi : algebra::mat_invert_or_throw(alg, amb.h0.psi, "h0");
  auto gram = algebra::zero_matrix(ring.algebra, k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const auto b = detail::block(h, r1, c1, r2, c2, r, c);
      const DAMorphism<A> entry{algebra::mat_mul(alg, inv1, b.phi),
                                free ? b.psi : algebra::mat_mul(alg, inv2, b.psi)};
      gram(r, c) = ring.to_element(entry);
    }
  }
  return forms::make_form(ring.algebra, std::move(gram));
}

// Transfer of an ε-hermitian form on the free module (A^r)^k; uses its left adjoint.
template <InvolutiveAlgebra A>
SesquilinearSystem<PresentedAlgebra<A>> transfer_form(const EndomorphismRing<A>& ring, const SesquilinearSystem<A>& h) {
  const auto& amb = ring.ambient;
  if (amb.kind != Ambient<A>::Kind::FreeModule) throw InvalidInput("the ambient object is a double-arrow object");
  if (h.index_count() != 1) throw InvalidInput("transfer takes a single form");
  if (!forms::is_unimodular(h)) throw InvalidInput("the form is not unimodular");
  if (!forms::is_epsilon_hermitian(h, 1) && !forms::is_epsilon_hermitian(h, -1)) {
    throw InvalidInput("the form is not epsilon-hermitian");
  }
  const std::size_t k = detail::power_of(amb, h.rank);
  return transfer_morphism_form(ring, {forms::left_adjoint(h, 0), algebra::zero_matrix(amb.algebra, 0, 0)}, k);
}

// Transfer of a unimodular ε-hermitian form on Q^k.
template <InvolutiveAlgebra A>
SesquilinearSystem<PresentedAlgebra<A>> transfer_form(const EndomorphismRing<A>& ring, const HermitianDAForm<A>& h) {
  const auto& amb = ring.ambient;
  if (amb.kind != Ambient<A>::Kind::DoubleArrow) throw InvalidInput("the ambient object is a free module");
  const auto problems = double_arrow::da_form_violations(h);
  if (!problems.empty()) throw InvalidInput("not a unimodular hermitian form: " + problems.front());
  const std::size_t k = detail::power_of(amb, h.object.m);
  if (!(h.object == power_object(amb.object, k))) throw InvalidInput("the object is not a power of the ambient object");
  return transfer_morphism_form(ring, {h.xi1, h.xi2}, k);
}

// F(f) for f: M^k → M^{k′}: the k′ × k matrix over E of its blocks.
template <InvolutiveAlgebra A>
MatrixOver<PresentedAlgebra<A>> transfer_morphism(const EndomorphismRing<A>& ring, const DAMorphism<A>& f) {
  const auto& amb = ring.ambient;
  const std::size_t m = amb.object.m, n = amb.object.n;
  const std::size_t k2 = detail::power_of(amb, f.phi.rows()), k = detail::power_of(amb, f.phi.cols());
  if (f.psi.rows() != n * k2 || f.psi.cols() != n * k) throw DimensionMismatch("psi has the wrong shape");
  auto out = algebra::zero_matrix(ring.algebra, k2, k);
  for (std::size_t r = 0; r < k2; ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = ring.to_element(detail::block(f, m, m, n, n, r, c));
  }
  return out;
}

// Inverse of transfer_morphism: assembles the blocks back into a morphism.
template <InvolutiveAlgebra A>
DAMorphism<A> untransfer_morphism(const EndomorphismRing<A>& ring, const MatrixOver<PresentedAlgebra<A>>& t) {
  const auto& amb = ring.ambient;
  const auto& alg = amb.algebra;
  const std::size_t m = amb.object.m, n = amb.object.n;
  DAMorphism<A> f{algebra::zero_matrix(alg, m * t.rows(), m * t.cols()), algebra::zero_matrix(alg, n * t.rows(), n * t.cols())};
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const auto b = ring.from_element(t(r, c));
      algebra::set_block(f.phi, r * m, c * m, b.phi);
      algebra::set_block(f.psi, r * n, c * n, b.psi);
    }
  }
  return f;
}

template <InvolutiveAlgebra E>
struct HClasses {
  // Orbit minima of σ-symmetric units under f ↦ σ(g) f g, g ∈ E^×.
  std::vector<typename E::Element> representatives;
  std::vector<std::uint64_t> orbit_sizes;
  // Element index → class, or −1 for elements that are not symmetric units.
  std::vector<std::int32_t> class_of;
};

template <EnumerableAlgebra E>
HClasses<E> enumerate_H(const E& alg, Budget& budget = Budget::unlimited()) {
  const std::uint64_t size = alg.size();
  budget.require(size, "H enumeration");
  std::vector<typename E::Element> units;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (algebra::is_invertible_fast(alg, algebra::scalar_matrix(alg, 1, alg.element(i)))) units.push_back(alg.element(i));
  }
  HClasses<E> out;
  out.class_of.assign(size, -2);
  for (std::uint64_t i = 0; i < size; ++i) {
    if (out.class_of[i] != -2) continue;
    const auto f = alg.element(i);
    const bool symmetric_unit = alg.conj(f) == f && std::find(units.begin(), units.end(), f) != units.end();
    if (!symmetric_unit) {
      out.class_of[i] = -1;
      continue;
    }
    const auto label = static_cast<std::int32_t>(out.representatives.size());
    std::uint64_t orbit = 0;
    budget.charge(units.size(), "H enumeration");
    for (const auto& g : units) {
      const auto image = alg.index(alg.mul(alg.conj(g), alg.mul(f, g)));
      if (out.class_of[image] == -2) {
        out.class_of[image] = label;
        ++orbit;
      }
    }
    out.representatives.push_back(f);
    out.orbit_sizes.push_back(orbit);
  }
  return out;
}

template <InvolutiveAlgebra E>
HClasses<E> enumerate_H(const E&, Budget& = Budget::unlimited())
  requires(!E::is_finite)
{
  throw InfiniteBase("H enumeration needs a finite base field");
}

// First isomorphism (φ, ψ): a → b in the order (φ, ψ) over GL × GL.
template <EnumerableAlgebra A>
std::optional<DAMorphism<A>> find_da_isomorphism(const DAObject<A>& a, const DAObject<A>& b, Budget& budget = Budget::unlimited()) {
  if (a.m != b.m || a.n != b.n || a.index_count() != b.index_count()) return std::nullopt;
  const auto phis = algebra::enumerate_units(a.algebra, a.m, budget);
  const auto psis = algebra::enumerate_units(a.algebra, a.n, budget);
  budget.require(saturating_mul(phis.size(), psis.size()), "double-arrow isomorphism search");
  for (const auto& phi : phis) {
    for (const auto& psi : psis) {
      if (double_arrow::is_da_morphism(a, b, phi, psi)) return DAMorphism<A>{phi, psi};
    }
  }
  return std::nullopt;
}

template <InvolutiveAlgebra A>
struct BijectionReport {
  std::size_t rank = 0;
  std::size_t index_count = 0;
  std::size_t isometry_classes = 0;  // systems with q(V) ≅ Q₀, up to isometry
  std::size_t h_classes = 0;         // |H(~, E^×)|
  std::size_t e_dimension = 0;
  bool well_defined = true;          // every member of a class lands in one H-class
  bool choice_independent = true;    // every isomorphism λ gives the same H-class
  bool injective = true;
  bool surjective = true;
  // class representative → H-class index
  std::vector<std::pair<SesquilinearSystem<A>, int>> mapping;

  bool bijection() const { return well_defined && choice_independent && injective && surjective; }
};

// Counts the systems V with q(V) ≅ Q₀ = q(V₀) up to isometry and compares with
// H(~, E^×) through [V] ↦ η_{V₀}⁻¹ η_V, where η_V = λ*(e_V, id)λ for an
// isomorphism λ: Q₀ → q(V) (the first one in search order).
template <EnumerableAlgebra A>
BijectionReport<A> verify_class_bijection(const SesquilinearSystem<A>& v0, Budget& budget = Budget::unlimited()) {
  const auto& alg = v0.algebra;
  const auto eta0 = double_arrow::functor_F(v0);
  const auto& q0 = eta0.object;
  const auto ring = endomorphism_ring(double_arrow_ambient(eta0));
  const auto h = enumerate_H(ring.algebra, budget);

  BijectionReport<A> report;
  report.rank = v0.rank;
  report.index_count = v0.index_count();
  report.e_dimension = ring.dim();
  report.h_classes = h.representatives.size();

  auto h_class = [&](const DAMorphism<A>& lambda) {
    // η_{V₀} is the identity pair, so η_{V₀}⁻¹ η_V = η_V.
    const auto eta = double_arrow::compose(alg, double_arrow::dual_morphism(alg, lambda), lambda);
    return h.class_of.at(ring.algebra.index(ring.to_element(eta)));
  };

  const auto classes = forms::classify_isometry_classes<A>(
      alg, v0.rank, v0.index_count(),
      [&](const SesquilinearSystem<A>& s) {
        return find_da_isomorphism(q0, double_arrow::underlying_object(s), budget).has_value();
      },
      budget);
  report.isometry_classes = classes.representatives.size();

  std::vector<int> image(classes.representatives.size(), -1);
  const auto count = forms::tuple_count(alg, v0.rank, v0.index_count());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const int cls = classes.class_of[idx];
    if (cls < 0) continue;
    const auto s = forms::tuple_at(alg, v0.rank, v0.index_count(), idx);
    const auto lambda = find_da_isomorphism(q0, double_arrow::underlying_object(s), budget);
    if (!lambda) {
      report.well_defined = false;
      continue;
    }
    const int hc = h_class(*lambda);
    if (hc < 0) report.well_defined = false;
    if (image[cls] == -1) {
      image[cls] = hc;
    } else if (image[cls] != hc) {
      report.well_defined = false;
    }
  }
  // Independence of λ: every isomorphism Q₀ → q(V) for each representative.
  const auto phis = algebra::enumerate_units(alg, q0.m, budget);
  const auto psis = algebra::enumerate_units(alg, q0.n, budget);
  for (std::size_t c = 0; c < classes.representatives.size(); ++c) {
    const auto q = double_arrow::underlying_object(classes.representatives[c]);
    budget.charge(saturating_mul(phis.size(), psis.size()), "isomorphism choices");
    for (const auto& phi : phis) {
      for (const auto& psi : psis) {
        if (double_arrow::is_da_morphism(q0, q, phi, psi) && h_class({phi, psi}) != image[c]) {
          report.choice_independent = false;
        }
      }
    }
    report.mapping.emplace_back(classes.representatives[c], image[c]);
  }
  std::vector<int> hits(report.h_classes, 0);
  for (int hc : image) {
    if (hc >= 0) ++hits[hc];
  }
  for (int n : hits) {
    if (n > 1) report.injective = false;
    if (n == 0) report.surjective = false;
  }
  return report;
}

template <InvolutiveAlgebra A>
BijectionReport<A> verify_class_bijection(const SesquilinearSystem<A>&, Budget& = Budget::unlimited())
  requires(!A::is_finite)
{
  throw InfiniteBase("the class bijection check needs a finite base field");
}

}  // namespace hermcat::transfer
