#pragma once

#include <cstdint>
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/forms/classify.hpp"
#include "hermcat/forms/isometry.hpp"
#include "hermcat/forms/system.hpp"
#include "hermcat/support/budget.hpp"

namespace hermcat::witt {

using algebra::EnumerableAlgebra;
using algebra::InvolutiveAlgebra;
using algebra::MatrixOver;
using forms::FormFilter;
using forms::SesquilinearSystem;

// The datum (M, N, (f_i, g_i)) with M = A^m, N = A^n and n × m arrows.
template <InvolutiveAlgebra A>
struct HyperbolicSpec {
  A algebra;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::pair<MatrixOver<A>, MatrixOver<A>>> arrows;

  friend bool operator==(const HyperbolicSpec& a, const HyperbolicSpec& b) {
    return a.m == b.m && a.n == b.n && a.arrows == b.arrows;
  }
};

template <InvolutiveAlgebra A>
HyperbolicSpec<A> make_spec(const A& alg, std::size_t m, std::size_t n,
                            std::vector<std::pair<MatrixOver<A>, MatrixOver<A>>> arrows) {
  if (arrows.empty()) throw DimensionMismatch("a hyperbolic datum needs at least one pair of arrows");
  for (const auto& [f, g] : arrows) {
    if (f.rows() != n || f.cols() != m || g.rows() != n || g.cols() != m) {
      throw DimensionMismatch("arrows must be " + std::to_string(n) + "x" + std::to_string(m));
    }
  }
  return {alg, m, n, std::move(arrows)};
}

// The form on M ⊕ N* given by (x₁ + y₁, x₂ + y₂) ↦ y₁(g(x₂)) + σ(y₂(f(x₁))),
// whose Gram matrix is [[0, F^†], [G, 0]].
template <InvolutiveAlgebra A>
SesquilinearSystem<A> hyperbolic_sesquilinear(const HyperbolicSpec<A>& spec) {
  const auto& alg = spec.algebra;
  std::vector<MatrixOver<A>> grams;
  for (const auto& [f, g] : spec.arrows) {
    grams.push_back(algebra::from_blocks(alg, algebra::zero_matrix(alg, spec.m, spec.m), algebra::conj_transpose(alg, f),
                                         g, algebra::zero_matrix(alg, spec.n, spec.n)));
  }
  return forms::make_system(alg, spec.m + spec.n, std::move(grams));
}

// [[0, ε·I_m], [I_m, 0]]
template <InvolutiveAlgebra A>
SesquilinearSystem<A> hyperbolic_hermitian_standard(const A& alg, std::size_t m, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be 1 or -1");
  return forms::make_form(alg, algebra::from_blocks(alg, algebra::zero_matrix(alg, m, m),
                                                    algebra::scalar_matrix(alg, m, alg.from_int(epsilon)),
                                                    algebra::identity(alg, m), algebra::zero_matrix(alg, m, m)));
}

// The form of the datum is hermitian exactly when f_i = g_i for all i.
template <InvolutiveAlgebra A>
bool hermitian_iff_equal_arrows(const HyperbolicSpec<A>& spec) {
  for (const auto& [f, g] : spec.arrows) {
    if (f != g) return false;
  }
  return true;
}

// ... and unimodular exactly when every arrow is invertible.
template <InvolutiveAlgebra A>
bool unimodular_iff_invertible(const HyperbolicSpec<A>& spec) {
  if (spec.m != spec.n) return spec.m + spec.n == 0;
  for (const auto& [f, g] : spec.arrows) {
    if (!algebra::is_invertible_fast(spec.algebra, f) || !algebra::is_invertible_fast(spec.algebra, g)) return false;
  }
  return true;
}

// For a datum (M, N, f, f) with f invertible, the map id_M ⊕ f^*, i.e.
// P = diag(I, F^†), satisfies P^† · standard · P = the form of the datum.
template <InvolutiveAlgebra A>
MatrixOver<A> standard_plane_witness(const HyperbolicSpec<A>& spec) {
  if (spec.arrows.size() != 1) throw InvalidInput("the plane witness needs a single pair of arrows");
  const auto& [f, g] = spec.arrows.front();
  if (f != g) throw InvalidInput("the plane witness needs equal arrows");
  if (!f.is_square() || !algebra::is_invertible_fast(spec.algebra, f)) throw NotInvertible("arrow is not invertible");
  return algebra::block_diagonal(spec.algebra, algebra::identity(spec.algebra, spec.m),
                                 algebra::conj_transpose(spec.algebra, f));
}

// Number of data with m + n = rank and the given number of arrow pairs.
template <EnumerableAlgebra A>
std::uint64_t spec_count(const A& alg, std::size_t rank, std::size_t index_count) {
  std::uint64_t total = 0;
  for (std::size_t m = 0; m <= rank; ++m) {
    total = saturating_add(total, saturating_pow(alg.size(), 2 * m * (rank - m) * index_count));
  }
  return total;
}

// Calls fn(spec) for every datum with m + n = rank: increasing m, then the
// serialization order of (F_0, G_0, F_1, G_1, …). Stops when fn returns false.
template <EnumerableAlgebra A, class Fn>
void for_each_spec(const A& alg, std::size_t rank, std::size_t index_count, Fn&& fn) {
  for (std::size_t m = 0; m <= rank; ++m) {
    const std::size_t n = rank - m;
    const std::uint64_t per = saturating_pow(alg.size(), n * m);
    const std::uint64_t count = saturating_pow(per, 2 * index_count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<MatrixOver<A>> mats(2 * index_count);
      std::uint64_t c = idx;
      for (std::size_t k = mats.size(); k-- > 0;) {
        mats[k] = algebra::matrix_from_index(alg, n, m, c % per);
        c /= per;
      }
      HyperbolicSpec<A> spec{alg, m, n, {}};
      for (std::size_t i = 0; i < index_count; ++i) spec.arrows.emplace_back(mats[2 * i], mats[2 * i + 1]);
      if (!fn(spec)) return;
    }
  }
}

template <InvolutiveAlgebra A>
struct HyperbolicWitness {
  HyperbolicSpec<A> spec;
  MatrixOver<A> isometry;  // P with P^† H̃(spec) P = the tested form
};

// Searches every datum with m + n = rank(form) for a hyperbolic form isometric
// to `form`. `spec_bound` caps the number of data examined.
template <EnumerableAlgebra A>
std::optional<HyperbolicWitness<A>> is_hyperbolic_bruteforce(const SesquilinearSystem<A>& form, std::uint64_t spec_bound,
                                                             Budget& budget = Budget::unlimited()) {
  const auto total = spec_count(form.algebra, form.rank, form.index_count());
  if (total > spec_bound) throw BudgetExceeded("hyperbolicity search exceeds the datum bound", total);
  budget.require(total, "hyperbolicity search");
  const auto invariants = forms::isometry_invariants(form);
  std::optional<forms::IsometrySearch<A>> search;
  std::optional<HyperbolicWitness<A>> found;
  for_each_spec(form.algebra, form.rank, form.index_count(), [&](const HyperbolicSpec<A>& spec) {
    budget.charge(1, "hyperbolicity search");
    const auto h = hyperbolic_sesquilinear(spec);
    if (forms::isometry_invariants(h) != invariants) return true;
    if (!search) search.emplace(form, budget);
    // q^† S q = H̃, so P = q⁻¹ carries H̃ to the form.
    if (auto q = search->find(h)) {
      found = HyperbolicWitness<A>{spec, algebra::mat_invert_or_throw(form.algebra, *q)};
      return false;
    }
    return true;
  });
  return found;
}

template <InvolutiveAlgebra A>
std::optional<HyperbolicWitness<A>> is_hyperbolic_bruteforce(const SesquilinearSystem<A>&, std::uint64_t,
                                                             Budget& = Budget::unlimited())
  requires(!A::is_finite)
{
  throw InfiniteBase("hyperbolicity testing needs a finite base field");
}

// Isometry classes of hyperbolic forms of rank ≤ max_rank passing the filter,
// one canonical representative each, in increasing (rank, serialization) order.
template <EnumerableAlgebra A>
std::vector<SesquilinearSystem<A>> hyperbolic_representatives(const A& alg, std::size_t max_rank,
                                                              std::size_t index_count, const FormFilter& filter,
                                                              Budget& budget = Budget::unlimited()) {
  std::vector<SesquilinearSystem<A>> out;
  for (std::size_t r = 0; r <= max_rank; ++r) {
    std::vector<std::uint64_t> seen;
    budget.require(spec_count(alg, r, index_count), "hyperbolic enumeration");
    for_each_spec(alg, r, index_count, [&](const HyperbolicSpec<A>& spec) {
      budget.charge(1, "hyperbolic enumeration");
      const auto h = hyperbolic_sesquilinear(spec);
      if (!filter.accepts(h)) return true;
      const auto canon = forms::tuple_index(forms::canonical_representative(h, budget));
      if (std::find(seen.begin(), seen.end(), canon) == seen.end()) seen.push_back(canon);
      return true;
    });
    std::sort(seen.begin(), seen.end());
    for (auto idx : seen) out.push_back(forms::tuple_at(alg, r, index_count, idx));
  }
  return out;
}

template <InvolutiveAlgebra A>
struct WittWitness {
  SesquilinearSystem<A> stabilizer_a;  // h with a ⊕ h ≅ b ⊕ h′
  SesquilinearSystem<A> stabilizer_b;  // h′
  MatrixOver<A> isometry;              // P with P^† (b ⊕ h′) P = a ⊕ h
};

// Certificate that a and b are Witt equivalent, using hyperbolic stabilizers of
// rank ≤ stab_bound that pass the filter. nullopt means "none within the bound".
template <EnumerableAlgebra A>
std::optional<WittWitness<A>> witt_equivalent(const SesquilinearSystem<A>& a, const SesquilinearSystem<A>& b,
                                              std::size_t stab_bound, const FormFilter& filter = {},
                                              Budget& budget = Budget::unlimited()) {
  forms::require_compatible(a, b, "Witt equivalence");
  const auto hyps = hyperbolic_representatives(a.algebra, stab_bound, a.index_count(), filter, budget);
  for (const auto& h : hyps) {
    for (const auto& h2 : hyps) {
      if (a.rank + h.rank != b.rank + h2.rank) continue;
      const auto lhs = forms::orthogonal_sum(a, h);
      const auto rhs = forms::orthogonal_sum(b, h2);
      if (auto p = forms::is_isometric_bruteforce(lhs, rhs, budget)) return WittWitness<A>{h, h2, *p};
    }
  }
  return std::nullopt;
}

}  // namespace hermcat::witt
