#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/algebra/matrix.hpp"
#include "hermcat/forms/system.hpp"
#include "hermcat/support/budget.hpp"

namespace hermcat::double_arrow {

using algebra::EnumerableAlgebra;
using algebra::InvolutiveAlgebra;
using algebra::MatrixOver;
using forms::SesquilinearSystem;

// (A^m, A^n, (F_i, G_i)) with every arrow an n × m matrix.
template <InvolutiveAlgebra A>
struct DAObject {
  A algebra;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::pair<MatrixOver<A>, MatrixOver<A>>> arrows;

  std::size_t index_count() const { return arrows.size(); }

  friend bool operator==(const DAObject& a, const DAObject& b) {
    return a.m == b.m && a.n == b.n && a.arrows == b.arrows && algebra::same_algebra(a.algebra, b.algebra);
  }
};

// (φ, ψ): (M, N, f, g) → (M′, N′, f′, g′), φ: M → M′ (m′ × m), ψ: N → N′ (n′ × n).
template <InvolutiveAlgebra A>
struct DAMorphism {
  MatrixOver<A> phi;
  MatrixOver<A> psi;

  friend bool operator==(const DAMorphism&, const DAMorphism&) = default;
};

// (ξ₁, ξ₂): Q → Q* with ξ₁: M → N* (n × m) and ξ₂: N → M* (m × n).
template <InvolutiveAlgebra A>
struct HermitianDAForm {
  DAObject<A> object;
  MatrixOver<A> xi1;
  MatrixOver<A> xi2;
  int epsilon = 1;

  friend bool operator==(const HermitianDAForm&, const HermitianDAForm&) = default;
};

template <InvolutiveAlgebra A>
DAObject<A> make_da_object(const A& alg, std::size_t m, std::size_t n,
                           std::vector<std::pair<MatrixOver<A>, MatrixOver<A>>> arrows) {
  if (arrows.empty()) throw DimensionMismatch("a double-arrow object needs at least one pair of arrows");
  for (const auto& [f, g] : arrows) {
    if (f.rows() != n || f.cols() != m || g.rows() != n || g.cols() != m) {
      throw DimensionMismatch("arrows must be " + std::to_string(n) + "x" + std::to_string(m));
    }
  }
  return {alg, m, n, std::move(arrows)};
}

// (N*, M*, (G_i^†, F_i^†))
template <InvolutiveAlgebra A>
DAObject<A> dual_object(const DAObject<A>& q) {
  DAObject<A> d{q.algebra, q.n, q.m, {}};
  for (const auto& [f, g] : q.arrows) {
    d.arrows.emplace_back(algebra::conj_transpose(q.algebra, g), algebra::conj_transpose(q.algebra, f));
  }
  return d;
}

template <InvolutiveAlgebra A>
void require_morphism_shape(const DAObject<A>& source, const DAObject<A>& target, const MatrixOver<A>& phi,
                            const MatrixOver<A>& psi) {
  if (source.index_count() != target.index_count()) throw DimensionMismatch("objects have different index sets");
  if (phi.rows() != target.m || phi.cols() != source.m) throw DimensionMismatch("phi has the wrong shape");
  if (psi.rows() != target.n || psi.cols() != source.n) throw DimensionMismatch("psi has the wrong shape");
}

// ψF_i = F′_iφ and ψG_i = G′_iφ for every i.
template <InvolutiveAlgebra A>
bool is_da_morphism(const DAObject<A>& source, const DAObject<A>& target, const MatrixOver<A>& phi,
                    const MatrixOver<A>& psi) {
  require_morphism_shape(source, target, phi, psi);
  const auto& alg = source.algebra;
  for (std::size_t i = 0; i < source.index_count(); ++i) {
    const auto& [f, g] = source.arrows[i];
    const auto& [f2, g2] = target.arrows[i];
    if (algebra::mat_mul(alg, psi, f) != algebra::mat_mul(alg, f2, phi)) return false;
    if (algebra::mat_mul(alg, psi, g) != algebra::mat_mul(alg, g2, phi)) return false;
  }
  return true;
}

template <InvolutiveAlgebra A>
DAMorphism<A> identity_morphism(const DAObject<A>& q) {
  return {algebra::identity(q.algebra, q.m), algebra::identity(q.algebra, q.n)};
}

// a ∘ b (apply b first)
template <InvolutiveAlgebra A>
DAMorphism<A> compose(const A& alg, const DAMorphism<A>& a, const DAMorphism<A>& b) {
  return {algebra::mat_mul(alg, a.phi, b.phi), algebra::mat_mul(alg, a.psi, b.psi)};
}

// (φ, ψ)* = (ψ^†, φ^†): Q′* → Q*
template <InvolutiveAlgebra A>
DAMorphism<A> dual_morphism(const A& alg, const DAMorphism<A>& f) {
  return {algebra::conj_transpose(alg, f.psi), algebra::conj_transpose(alg, f.phi)};
}

// E_Q: Q → Q** is the identity pair under the free-module convention.
template <InvolutiveAlgebra A>
DAMorphism<A> double_dual_unit(const DAObject<A>& q) {
  return identity_morphism(q);
}

// E*_C ∘ E_{C*} = id_{C*}, together with C** = C.
template <InvolutiveAlgebra A>
bool duality_axiom_holds(const DAObject<A>& c) {
  const auto cd = dual_object(c);
  if (dual_object(cd) != c) return false;
  const auto e_c = double_dual_unit(c);
  const auto e_cd = double_dual_unit(cd);
  if (!is_da_morphism(c, dual_object(cd), e_c.phi, e_c.psi)) return false;
  // E_C: C → C**, so E*_C: C*** → C*, composed with E_{C*}: C* → C***.
  return compose(c.algebra, dual_morphism(c.algebra, e_c), e_cd) == identity_morphism(cd);
}

template <InvolutiveAlgebra A>
DAObject<A> direct_sum(const DAObject<A>& a, const DAObject<A>& b) {
  if (a.index_count() != b.index_count()) throw DimensionMismatch("objects have different index sets");
  if (!algebra::same_algebra(a.algebra, b.algebra)) throw InvalidInput("objects live over different algebras");
  DAObject<A> s{a.algebra, a.m + b.m, a.n + b.n, {}};
  for (std::size_t i = 0; i < a.index_count(); ++i) {
    s.arrows.emplace_back(algebra::block_diagonal(a.algebra, a.arrows[i].first, b.arrows[i].first),
                          algebra::block_diagonal(a.algebra, a.arrows[i].second, b.arrows[i].second));
  }
  return s;
}

// Reasons why h fails to be a unimodular ε-hermitian form; empty when valid.
template <InvolutiveAlgebra A>
std::vector<std::string> da_form_violations(const HermitianDAForm<A>& h) {
  std::vector<std::string> out;
  const auto& q = h.object;
  const auto& alg = q.algebra;
  if (h.epsilon != 1 && h.epsilon != -1) out.push_back("epsilon must be 1 or -1");
  if (h.xi1.rows() != q.n || h.xi1.cols() != q.m || h.xi2.rows() != q.m || h.xi2.cols() != q.n) {
    out.push_back("xi has the wrong shape");
    return out;
  }
  if (!is_da_morphism(q, dual_object(q), h.xi1, h.xi2)) out.push_back("xi is not a morphism into the dual object");
  if (h.epsilon == 1 || h.epsilon == -1) {
    const auto eps = alg.from_int(h.epsilon);
    if (h.xi1 != algebra::scale_left(alg, eps, algebra::conj_transpose(alg, h.xi2))) {
      out.push_back("xi is not epsilon-hermitian: xi1 != epsilon * xi2^dagger");
    }
  }
  if (q.m != q.n || !algebra::is_invertible_fast(alg, h.xi1) || !algebra::is_invertible_fast(alg, h.xi2)) {
    out.push_back("xi is not unimodular");
  }
  return out;
}

template <InvolutiveAlgebra A>
bool is_valid_da_form(const HermitianDAForm<A>& h) {
  return da_form_violations(h).empty();
}

// F (Ψ for several forms): (V, (s_i)) ↦ ((V, V*, (s_il, s_ir)), (e_V, id)).
template <InvolutiveAlgebra A>
HermitianDAForm<A> functor_F(const SesquilinearSystem<A>& form) {
  DAObject<A> q{form.algebra, form.rank, form.rank, {}};
  for (std::size_t i = 0; i < form.index_count(); ++i) {
    q.arrows.emplace_back(forms::left_adjoint(form, i), forms::right_adjoint(form, i));
  }
  const auto id = algebra::identity(form.algebra, form.rank);
  return {std::move(q), id, id, 1};
}

// The object q(V, (s_i)) underlying F.
template <InvolutiveAlgebra A>
DAObject<A> underlying_object(const SesquilinearSystem<A>& form) {
  return functor_F(form).object;
}

// F on an isometry P (P^† S_b P = S_a): (P, (P^†)⁻¹).
template <InvolutiveAlgebra A>
DAMorphism<A> functor_F_morphism(const A& alg, const MatrixOver<A>& p) {
  return {p, algebra::mat_invert_or_throw(alg, algebra::conj_transpose(alg, p), "isometry")};
}

// G (Φ for several forms): Gram_i = ξ₂ G_i, the matrix of ξ₂ f_i under the
// left-adjoint convention. G(F(s)) = s exactly.
template <InvolutiveAlgebra A>
SesquilinearSystem<A> functor_G(const HermitianDAForm<A>& h) {
  const auto problems = da_form_violations(h);
  if (!problems.empty()) throw InvalidInput("not a unimodular hermitian form: " + problems.front());
  if (h.epsilon != 1) throw InvalidInput("the functor G is defined on hermitian (epsilon = 1) forms");
  std::vector<MatrixOver<A>> grams;
  for (const auto& [f, g] : h.object.arrows) grams.push_back(algebra::mat_mul(h.object.algebra, h.xi2, g));
  return forms::make_system(h.object.algebra, h.object.m, std::move(grams));
}

// G on a DA isometry: its first component.
template <InvolutiveAlgebra A>
MatrixOver<A> functor_G_morphism(const DAMorphism<A>& f) {
  return f.phi;
}

// (φ, ψ) is an isometry h → h2: invertible morphism with h = (φ, ψ)* h2 (φ, ψ).
template <InvolutiveAlgebra A>
bool is_da_isometry(const HermitianDAForm<A>& h, const HermitianDAForm<A>& h2, const DAMorphism<A>& f) {
  const auto& alg = h.object.algebra;
  if (f.phi.rows() != h2.object.m || f.phi.cols() != h.object.m || f.psi.rows() != h2.object.n ||
      f.psi.cols() != h.object.n) {
    return false;
  }
  if (!f.phi.is_square() || !f.psi.is_square()) return false;
  if (!algebra::is_invertible_fast(alg, f.phi) || !algebra::is_invertible_fast(alg, f.psi)) return false;
  if (!is_da_morphism(h.object, h2.object, f.phi, f.psi)) return false;
  const auto lhs1 = algebra::mat_mul(alg, algebra::conj_transpose(alg, f.psi), algebra::mat_mul(alg, h2.xi1, f.phi));
  const auto lhs2 = algebra::mat_mul(alg, algebra::conj_transpose(alg, f.phi), algebra::mat_mul(alg, h2.xi2, f.psi));
  return lhs1 == h.xi1 && lhs2 == h.xi2;
}

// Explicit isometry h → F(G(h)): (id, ξ₂).
template <InvolutiveAlgebra A>
DAMorphism<A> roundtrip_witness(const HermitianDAForm<A>& h) {
  return {algebra::identity(h.object.algebra, h.object.m), h.xi2};
}

// Search over φ ∈ GL_m; for a unimodular target ψ is forced to (φ^†ξ₂′)⁻¹ξ₂.
template <EnumerableAlgebra A>
std::optional<DAMorphism<A>> is_da_isometric_bruteforce(const HermitianDAForm<A>& h, const HermitianDAForm<A>& h2,
                                                        Budget& budget = Budget::unlimited()) {
  const auto& alg = h.object.algebra;
  if (h.object.m != h2.object.m || h.object.n != h2.object.n || h.object.index_count() != h2.object.index_count()) {
    return std::nullopt;
  }
  if (h.epsilon != h2.epsilon) return std::nullopt;
  for (const auto* form : {&h, &h2}) {
    const auto problems = da_form_violations(*form);
    if (!problems.empty()) throw InvalidInput("not a unimodular hermitian form: " + problems.front());
  }
  if (h == h2) return identity_morphism(h.object);
  const auto units = algebra::enumerate_units(alg, h.object.m, budget);
  budget.charge(units.size(), "double-arrow isometry search");
  for (const auto& phi : units) {
    const auto inner = algebra::mat_mul(alg, algebra::conj_transpose(alg, phi), h2.xi2);
    const auto inner_inv = algebra::mat_invert(alg, inner);
    if (!inner_inv) continue;
    DAMorphism<A> f{phi, algebra::mat_mul(alg, *inner_inv, h.xi2)};
    if (is_da_isometry(h, h2, f)) return f;
  }
  return std::nullopt;
}

template <InvolutiveAlgebra A>
std::optional<DAMorphism<A>> is_da_isometric_bruteforce(const HermitianDAForm<A>&, const HermitianDAForm<A>&,
                                                        Budget& = Budget::unlimited())
  requires(!A::is_finite)
{
  throw InfiniteBase("double-arrow isometry testing needs a finite base field");
}

// H_Q = εE_Q ⊕ id_{Q*} on Q ⊕ Q* = (M ⊕ N*, N ⊕ M*, (diag(F, G^†), diag(G, F^†))).
template <InvolutiveAlgebra A>
HermitianDAForm<A> hyperbolic_da(const DAObject<A>& q, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be 1 or -1");
  const auto& alg = q.algebra;
  const auto obj = direct_sum(q, dual_object(q));
  const auto eps = alg.from_int(epsilon);
  using algebra::zero_matrix;
  const auto xi1 = algebra::from_blocks(alg, zero_matrix(alg, q.n, q.m), algebra::identity(alg, q.n),
                                        algebra::scalar_matrix(alg, q.m, eps), zero_matrix(alg, q.m, q.n));
  const auto xi2 = algebra::from_blocks(alg, zero_matrix(alg, q.m, q.n), algebra::identity(alg, q.m),
                                        algebra::scalar_matrix(alg, q.n, eps), zero_matrix(alg, q.n, q.m));
  return {obj, xi1, xi2, epsilon};
}

template <InvolutiveAlgebra A>
HermitianDAForm<A> orthogonal_sum(const HermitianDAForm<A>& a, const HermitianDAForm<A>& b) {
  if (a.epsilon != b.epsilon) throw InvalidInput("forms have different epsilon");
  const auto& alg = a.object.algebra;
  return {direct_sum(a.object, b.object), algebra::block_diagonal(alg, a.xi1, b.xi1),
          algebra::block_diagonal(alg, a.xi2, b.xi2), a.epsilon};
}

}  // namespace hermcat::double_arrow
