#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/forms/system.hpp"
#include "hermcat/support/budget.hpp"

namespace hermcat::forms {

// Restrictions on the forms being classified. Both are isometry invariants.
struct FormFilter {
  std::optional<int> epsilon;  // keep only ε-hermitian systems
  bool unimodular = false;     // keep only systems with every Gram invertible

  template <InvolutiveAlgebra A>
  bool accepts(const SesquilinearSystem<A>& form) const {
    if (epsilon && !is_epsilon_hermitian(form, *epsilon)) return false;
    if (unimodular && !is_unimodular(form)) return false;
    return true;
  }
};

template <InvolutiveAlgebra A>
using FormPredicate = std::function<bool(const SesquilinearSystem<A>&)>;

template <InvolutiveAlgebra A>
FormPredicate<A> as_predicate(const FormFilter& filter) {
  return [filter](const SesquilinearSystem<A>& f) { return filter.accepts(f); };
}

// Gram tuples (S_0, …, S_{|I|−1}) are numbered by reading all entries, S_0 row
// by row first, as one base-|A| numeral. This numbering is the serialization
// order, so the smallest index in an orbit is its canonical representative.
template <EnumerableAlgebra A>
std::uint64_t tuple_count(const A& alg, std::size_t rank, std::size_t index_count) {
  return saturating_pow(alg.size(), rank * rank * index_count);
}

template <EnumerableAlgebra A>
std::uint64_t tuple_index(const SesquilinearSystem<A>& form) {
  std::uint64_t index = 0;
  for (const auto& g : form.grams) {
    for (const auto& e : g.entries()) index = index * form.algebra.size() + form.algebra.index(e);
  }
  return index;
}

template <EnumerableAlgebra A>
SesquilinearSystem<A> tuple_at(const A& alg, std::size_t rank, std::size_t index_count, std::uint64_t index) {
  std::vector<MatrixOver<A>> grams(index_count, algebra::zero_matrix(alg, rank, rank));
  for (std::size_t i = index_count; i-- > 0;) {
    auto& e = grams[i].entries();
    for (std::size_t k = e.size(); k-- > 0;) {
      e[k] = alg.element(index % alg.size());
      index /= alg.size();
    }
  }
  return {alg, rank, std::move(grams)};
}

template <EnumerableAlgebra A>
struct Classification {
  std::size_t rank = 0;
  std::size_t index_count = 0;
  // Orbit minima of the orbits passing the filter, in increasing tuple order.
  std::vector<SesquilinearSystem<A>> representatives;
  std::vector<std::uint64_t> orbit_sizes;
  // Tuple index → position in `representatives`, or −1 for filtered orbits.
  std::vector<std::int32_t> class_of;

  int class_index(const SesquilinearSystem<A>& form) const { return class_of.at(tuple_index(form)); }
};

// One canonical representative per GL_rank(A)-orbit of Gram tuples satisfying
// the predicate (which must be constant on orbits).
template <EnumerableAlgebra A>
Classification<A> classify_isometry_classes(const A& alg, std::size_t rank, std::size_t index_count,
                                            const FormPredicate<A>& accept, Budget& budget = Budget::unlimited()) {
  if (index_count == 0) throw InvalidInput("a system needs at least one Gram matrix");
  const std::uint64_t total = tuple_count(alg, rank, index_count);
  constexpr std::uint64_t kMaxTuples = std::uint64_t{1} << 26;
  if (total > kMaxTuples) throw BudgetExceeded("classification of rank " + std::to_string(rank) + " systems", total);
  budget.require(total, "isometry classification");
  const auto units = algebra::enumerate_units(alg, rank, budget);

  Classification<A> out;
  out.rank = rank;
  out.index_count = index_count;
  out.class_of.assign(total, -2);  // −2: not yet visited
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (out.class_of[idx] != -2) continue;
    const auto form = tuple_at(alg, rank, index_count, idx);
    // The predicate is constant on orbits, so rejected tuples need no orbit.
    if (!accept(form)) {
      out.class_of[idx] = -1;
      continue;
    }
    const auto label = static_cast<std::int32_t>(out.representatives.size());
    std::uint64_t size = 0;
    budget.charge(units.size(), "isometry classification");
    for (const auto& p : units) {
      const std::uint64_t image = tuple_index(pullback(form, p));
      if (out.class_of[image] == -2) {
        out.class_of[image] = label;
        ++size;
      }
    }
    out.representatives.push_back(form);
    out.orbit_sizes.push_back(size);
  }
  return out;
}

template <EnumerableAlgebra A>
Classification<A> classify_isometry_classes(const A& alg, std::size_t rank, std::size_t index_count,
                                            const FormFilter& filter = {}, Budget& budget = Budget::unlimited()) {
  return classify_isometry_classes(alg, rank, index_count, as_predicate<A>(filter), budget);
}

// Orbit minimum of a single form.
template <EnumerableAlgebra A>
SesquilinearSystem<A> canonical_representative(const SesquilinearSystem<A>& form, Budget& budget = Budget::unlimited()) {
  const auto units = algebra::enumerate_units(form.algebra, form.rank, budget);
  std::uint64_t best = tuple_index(form);
  for (const auto& p : units) best = std::min(best, tuple_index(pullback(form, p)));
  budget.charge(units.size(), "canonical representative");
  return tuple_at(form.algebra, form.rank, form.index_count(), best);
}

}  // namespace hermcat::forms
