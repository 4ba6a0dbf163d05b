#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "hermcat/extension/extension.hpp"
#include "hermcat/forms/classify.hpp"
#include "hermcat/forms/isometry.hpp"
#include "hermcat/support/parallel.hpp"
#include "hermcat/transfer/transfer.hpp"
#include "hermcat/witt/hyperbolic.hpp"

namespace hermcat::extension {

using algebra::EnumerableAlgebra;

template <InvolutiveAlgebra A>
struct CollapsingPair {
  SesquilinearSystem<A> first;
  SesquilinearSystem<A> second;
  MatrixOver<ExtendedAlgebra<A>> witness;  // P^† second_L P = first_L over A_L
};

template <InvolutiveAlgebra A>
struct SpringerReport {
  int degree = 1;
  std::size_t rank_bound = 0;
  std::size_t index_count = 1;
  std::vector<std::size_t> classes_per_rank;  // over the base
  std::uint64_t pairs_tested = 0;             // pairs compared with the oracle over A_L
  // Distinct base classes that become isometric over A_L. For odd degree these
  // are counterexamples to descent; for even degree they are the expected collapses.
  std::vector<CollapsingPair<A>> collapses;

  bool odd_degree() const { return degree % 2 == 1; }
  bool descent_holds() const { return collapses.empty(); }
};

// Classifies systems of rank ≤ rank_bound over A and compares every pair of
// distinct classes over A_L. Pairs whose extensions have different cheap
// invariants are skipped, as the oracle would reject them.
template <EnumerableAlgebra A>
SpringerReport<A> springer_check(const A& alg, const FieldExtension<typename A::Field>& ext, std::size_t rank_bound,
                                 std::size_t index_count, Budget& budget = Budget::unlimited(), unsigned threads = 1) {
  const auto alg_l = extend_algebra(alg, ext);
  SpringerReport<A> report;
  report.degree = ext.degree;
  report.rank_bound = rank_bound;
  report.index_count = index_count;
  for (std::size_t r = 0; r <= rank_bound; ++r) {
    const auto cls = forms::classify_isometry_classes(alg, r, index_count, forms::FormFilter{}, budget);
    const auto& reps = cls.representatives;
    report.classes_per_rank.push_back(reps.size());
    std::vector<SesquilinearSystem<ExtendedAlgebra<A>>> lifted;
    std::vector<std::vector<long>> invariants;
    for (const auto& rep : reps) {
      lifted.push_back(extend_form(rep, alg_l, ext));
      invariants.push_back(forms::isometry_invariants(lifted.back()));
    }
    std::vector<std::vector<std::pair<std::size_t, MatrixOver<ExtendedAlgebra<A>>>>> found(reps.size());
    std::vector<std::uint64_t> tested(reps.size(), 0);
    parallel_for(reps.size(), threads, [&](std::size_t j) {
      std::optional<forms::IsometrySearch<ExtendedAlgebra<A>>> search;
      for (std::size_t i = 0; i < j; ++i) {
        if (invariants[i] != invariants[j]) continue;
        if (!search) search.emplace(lifted[j], budget);
        ++tested[j];
        if (auto p = search->find(lifted[i])) found[j].emplace_back(i, std::move(*p));
      }
    });
    for (std::size_t j = 0; j < reps.size(); ++j) {
      report.pairs_tested += tested[j];
      for (auto& [i, p] : found[j]) report.collapses.push_back({reps[i], reps[j], std::move(p)});
    }
  }
  return report;
}

template <InvolutiveAlgebra A>
struct SquareInstance {
  SesquilinearSystem<A> h0;
  int epsilon0 = 1;
  SesquilinearSystem<A> form;
  bool commutes = false;
};

template <InvolutiveAlgebra A>
struct RestrictionReport {
  int degree = 1;
  int epsilon = 1;
  std::size_t rank_bound = 0;
  std::uint64_t forms_checked = 0;       // base classes of unimodular ε-hermitian forms
  std::uint64_t hyperbolic_after = 0;    // of these, hyperbolic over A_L
  std::vector<SesquilinearSystem<A>> injectivity_violations;
  bool embedding_is_isomorphism = true;  // E ⊗ L → End(M_L) respects product, unit and involution
  std::uint64_t square_instances = 0;
  std::vector<SquareInstance<A>> square_failures;

  bool holds() const { return injectivity_violations.empty() && embedding_is_isomorphism && square_failures.empty(); }
};

// θ: End(M) ⊗ L → End(M_L), e_t ⊗ 1 ↦ (e_t)_L, as images of the basis.
template <EnumerableAlgebra A>
struct RingComparison {
  std::vector<typename ExtendedAlgebra<A>::Element> images;
  bool isomorphism = true;
};

template <EnumerableAlgebra A>
RingComparison<A> compare_rings(const transfer::EndomorphismRing<A>& ring,
                                const transfer::EndomorphismRing<ExtendedAlgebra<A>>& ring_l,
                                const ExtendedAlgebra<A>& e_l, const FieldExtension<typename A::Field>& ext) {
  RingComparison<A> cmp;
  const auto& alg = ring.ambient.algebra;
  const auto& alg_l = ring_l.ambient.algebra;
  for (const auto& b : ring.basis) cmp.images.push_back(ring_l.to_element(extend_morphism(alg, alg_l, ext, b)));
  const auto& target = ring_l.algebra;
  auto theta = [&](const typename ExtendedAlgebra<A>::Element& x) {
    const auto c = e_l.coefficients(x);
    auto y = target.zero();
    for (std::size_t t = 0; t < c.size(); ++t) y = target.add(y, target.mul(target.embed(c[t]), cmp.images[t]));
    return y;
  };
  const std::size_t d = ring.dim();
  if (ring_l.dim() != d) {
    cmp.isomorphism = false;
    return cmp;
  }
  if (theta(e_l.one()) != target.one()) cmp.isomorphism = false;
  for (std::size_t i = 0; i < d; ++i) {
    const auto bi = e_l.basis(static_cast<int>(i));
    if (theta(e_l.conj(bi)) != target.conj(cmp.images[i])) cmp.isomorphism = false;
    for (std::size_t j = 0; j < d; ++j) {
      const auto bj = e_l.basis(static_cast<int>(j));
      if (theta(e_l.mul(bi, bj)) != target.mul(cmp.images[i], cmp.images[j])) cmp.isomorphism = false;
    }
  }
  // Bijective: the images are linearly independent over L.
  algebra::BaseMatrix<typename A::Field> m(d, d, ext.field.zero());
  for (std::size_t t = 0; t < d; ++t) {
    const auto c = target.coefficients(cmp.images[t]);
    for (std::size_t r = 0; r < d; ++r) m.at(r, t) = c[r];
  }
  if (algebra::base_rank(ext.field, m) != d) cmp.isomorphism = false;
  return cmp;
}

// (1) Injectivity of W^ε(A) → W^ε(A_L) on unimodular ε-hermitian forms of rank
// ≤ rank_bound: a form hyperbolic over A_L must be hyperbolic over A.
// (2) The square "transfer then extend" = "extend then transfer" on every
// rank-1 ambient (M = A, h₀ unimodular ε₀-hermitian) and every unimodular
// ε-hermitian form on M and M², identified through θ.
template <EnumerableAlgebra A>
RestrictionReport<A> restriction_map_check(const A& alg, const FieldExtension<typename A::Field>& ext,
                                           std::size_t rank_bound, int epsilon, Budget& budget = Budget::unlimited()) {
  if (ext.degree % 2 == 0) throw InvalidInput("the restriction check needs an extension of odd degree");
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be 1 or -1");
  const auto alg_l = extend_algebra(alg, ext);
  RestrictionReport<A> report;
  report.degree = ext.degree;
  report.epsilon = epsilon;
  report.rank_bound = rank_bound;
  const forms::FormFilter filter{epsilon, true};

  for (std::size_t r = 0; r <= rank_bound; ++r) {
    const auto cls = forms::classify_isometry_classes(alg, r, 1, filter, budget);
    for (const auto& rep : cls.representatives) {
      ++report.forms_checked;
      if (!witt::is_hyperbolic_bruteforce(extend_form(rep, alg_l, ext), Budget::kUnlimited, budget)) continue;
      ++report.hyperbolic_after;
      if (!witt::is_hyperbolic_bruteforce(rep, Budget::kUnlimited, budget)) report.injectivity_violations.push_back(rep);
    }
  }

  for (int eps0 : {1, -1}) {
    for (std::uint64_t a = 0; a < alg.size(); ++a) {
      auto g0 = algebra::zero_matrix(alg, 1, 1);
      g0(0, 0) = alg.element(a);
      const auto h0 = forms::make_form(alg, g0);
      if (!forms::is_unimodular(h0) || !forms::is_epsilon_hermitian(h0, eps0)) continue;
      const auto ring = transfer::endomorphism_ring(transfer::free_module_ambient(h0, eps0));
      const auto h0_l = extend_form(h0, alg_l, ext);
      const auto ring_l = transfer::endomorphism_ring(transfer::free_module_ambient(h0_l, eps0));
      const auto e_l = extend_algebra(ring.algebra, ext);
      const auto cmp = compare_rings(ring, ring_l, e_l, ext);
      if (!cmp.isomorphism) {
        report.embedding_is_isomorphism = false;
        continue;
      }
      for (std::size_t k = 1; k <= 2; ++k) {
        const auto count = forms::tuple_count(alg, k, 1);
        budget.require(count, "transfer square");
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          const auto h = forms::tuple_at(alg, k, 1, idx);
          if (!forms::is_unimodular(h) || !forms::is_epsilon_hermitian(h, epsilon)) continue;
          budget.charge(k * k, "transfer square");
          ++report.square_instances;
          // Transfer over A, then extend E to E ⊗ L and move to End(M_L) by θ.
          const auto t = transfer::transfer_form(ring, h);
          auto via_base = algebra::zero_matrix(ring_l.algebra, k, k);
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              const auto c = e_l.coefficients(extend_element(ring.algebra, e_l, ext, t.gram()(i, j)));
              auto y = ring_l.algebra.zero();
              for (std::size_t s = 0; s < c.size(); ++s) {
                y = ring_l.algebra.add(y, ring_l.algebra.mul(ring_l.algebra.embed(c[s]), cmp.images[s]));
              }
              via_base(i, j) = y;
            }
          }
          // Extend the form first, then transfer over A_L.
          const auto via_ext = transfer::transfer_form(ring_l, extend_form(h, alg_l, ext));
          const auto lhs = forms::make_form(ring_l.algebra, via_base);
          const bool ok = forms::is_isometry(lhs, via_ext, algebra::identity(ring_l.algebra, k));
          if (!ok) report.square_failures.push_back({h0, eps0, h, false});
        }
      }
    }
  }
  return report;
}

}  // namespace hermcat::extension
