#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "hermcat/forms/classify.hpp"
#include "hermcat/forms/isometry.hpp"
#include "hermcat/witt/hyperbolic.hpp"

namespace hermcat::witt {

template <EnumerableAlgebra A>
struct WittClassEntry {
  SesquilinearSystem<A> representative;  // orbit minimum
  bool is_hyperbolic = false;
  int witt_class = -1;
};

template <EnumerableAlgebra A>
struct WittClassTable {
  A algebra;
  std::size_t rank_bound = 0;
  std::size_t index_count = 1;
  FormFilter filter;
  // Sorted by (rank, tuple index of the representative).
  std::vector<WittClassEntry<A>> classes;
  std::size_t witt_class_count = 0;
  // (w₁, w₂) ↦ Witt class of the sum, for every pair realized within the bound.
  std::map<std::pair<int, int>, int> sum_law;
};

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

// Classifies all systems of rank ≤ rank_bound passing the filter, marks the
// hyperbolic classes with the hyperbolicity oracle and identifies c with c ⊕ h
// for every hyperbolic h whenever the sum stays within the bound.
template <EnumerableAlgebra A>
WittClassTable<A> build_witt_table(const A& alg, std::size_t rank_bound, std::size_t index_count,
                                   const FormFilter& filter, Budget& budget = Budget::unlimited()) {
  WittClassTable<A> table{alg, rank_bound, index_count, filter, {}, 0, {}};
  std::vector<forms::Classification<A>> by_rank;
  std::vector<std::size_t> offset;
  for (std::size_t r = 0; r <= rank_bound; ++r) {
    by_rank.push_back(forms::classify_isometry_classes(alg, r, index_count, filter, budget));
    offset.push_back(table.classes.size());
    for (const auto& rep : by_rank.back().representatives) {
      const bool hyp = is_hyperbolic_bruteforce(rep, Budget::kUnlimited, budget).has_value();
      table.classes.push_back({rep, hyp, -1});
    }
  }
  auto global_class = [&](const SesquilinearSystem<A>& form) -> std::optional<std::size_t> {
    const int local = by_rank.at(form.rank).class_index(form);
    if (local < 0) return std::nullopt;
    return offset[form.rank] + static_cast<std::size_t>(local);
  };

  detail::DisjointSets sets(table.classes.size());
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    for (std::size_t h = 0; h < table.classes.size(); ++h) {
      const auto& a = table.classes[c].representative;
      const auto& b = table.classes[h].representative;
      if (!table.classes[h].is_hyperbolic || a.rank + b.rank > rank_bound) continue;
      if (auto s = global_class(forms::orthogonal_sum(a, b))) sets.unite(c, *s);
    }
  }
  // The rank-0 class is first, so its component receives Witt class 0.
  std::map<std::size_t, int> ids;
  for (auto& entry : table.classes) {
    const auto root = sets.find(static_cast<std::size_t>(&entry - table.classes.data()));
    auto [it, inserted] = ids.emplace(root, static_cast<int>(ids.size()));
    entry.witt_class = it->second;
  }
  table.witt_class_count = ids.size();

  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    for (std::size_t d = 0; d < table.classes.size(); ++d) {
      const auto& a = table.classes[c];
      const auto& b = table.classes[d];
      if (a.representative.rank + b.representative.rank > rank_bound) continue;
      const auto s = global_class(forms::orthogonal_sum(a.representative, b.representative));
      if (!s) continue;
      const int w = table.classes[*s].witt_class;
      auto [it, inserted] = table.sum_law.emplace(std::pair{a.witt_class, b.witt_class}, w);
      if (!inserted && it->second != w) {
        throw Error("orthogonal sum is not well defined on the Witt classes found within the bound");
      }
    }
  }
  return table;
}

template <InvolutiveAlgebra A>
struct CancellationReport {
  bool sums_isometric = false;
  bool summands_isometric = false;
  std::optional<MatrixOver<A>> sum_witness;      // P^† (V″ ⊕ V) P = V′ ⊕ V
  std::optional<MatrixOver<A>> summand_witness;  // P^† V″ P = V′
  bool holds() const { return !sums_isometric || summands_isometric; }
};

// Tests the implication V′ ⊕ V ≅ V″ ⊕ V ⇒ V′ ≅ V″ with the isometry oracle.
template <EnumerableAlgebra A>
CancellationReport<A> cancellation_check(const SesquilinearSystem<A>& v1, const SesquilinearSystem<A>& v2,
                                         const SesquilinearSystem<A>& v, Budget& budget = Budget::unlimited()) {
  forms::require_compatible(v1, v2, "cancellation");
  forms::require_compatible(v1, v, "cancellation");
  CancellationReport<A> report;
  report.summand_witness = forms::is_isometric_bruteforce(v1, v2, budget);
  report.summands_isometric = report.summand_witness.has_value();
  report.sum_witness = forms::is_isometric_bruteforce(forms::orthogonal_sum(v1, v), forms::orthogonal_sum(v2, v), budget);
  report.sums_isometric = report.sum_witness.has_value();
  return report;
}

template <InvolutiveAlgebra A>
CancellationReport<A> cancellation_check(const SesquilinearSystem<A>&, const SesquilinearSystem<A>&,
                                         const SesquilinearSystem<A>&, Budget& = Budget::unlimited())
  requires(!A::is_finite)
{
  throw InfiniteBase("cancellation checks need a finite base field");
}

template <EnumerableAlgebra A>
struct CancellationSweep {
  std::uint64_t triples = 0;         // (V′, V″, V) examined
  std::uint64_t sums_isometric = 0;  // triples satisfying the hypothesis
  std::vector<std::tuple<SesquilinearSystem<A>, SesquilinearSystem<A>, SesquilinearSystem<A>>> counterexamples;
};

// V′ and V″ run over all Gram tuples of equal rank ≤ summand_rank, V over the
// isometry class representatives of rank ≤ summand_rank.
template <EnumerableAlgebra A>
CancellationSweep<A> cancellation_sweep(const A& alg, std::size_t summand_rank, std::size_t index_count,
                                        Budget& budget = Budget::unlimited()) {
  CancellationSweep<A> sweep;
  std::vector<forms::Classification<A>> by_rank;
  std::vector<SesquilinearSystem<A>> stabilizers;
  for (std::size_t r = 0; r <= summand_rank; ++r) {
    by_rank.push_back(forms::classify_isometry_classes(alg, r, index_count, FormFilter{}, budget));
    for (const auto& rep : by_rank.back().representatives) stabilizers.push_back(rep);
  }
  for (std::size_t r = 0; r <= summand_rank; ++r) {
    const auto count = forms::tuple_count(alg, r, index_count);
    const auto& cls = by_rank[r];
    for (const auto& v : stabilizers) {
      for (std::uint64_t j = 0; j < count; ++j) {
        const auto v2 = forms::tuple_at(alg, r, index_count, j);
        forms::IsometrySearch<A> search(forms::orthogonal_sum(v2, v), budget);
        for (std::uint64_t i = 0; i < count; ++i) {
          const auto v1 = forms::tuple_at(alg, r, index_count, i);
          ++sweep.triples;
          if (!search.find(forms::orthogonal_sum(v1, v))) continue;
          ++sweep.sums_isometric;
          // Summand isometry: same orbit in the classification, confirmed by the oracle.
          const bool same_class = cls.class_of[i] == cls.class_of[j];
          if (!same_class || !forms::is_isometric_bruteforce(v1, v2, budget)) {
            sweep.counterexamples.emplace_back(v1, v2, v);
          }
        }
      }
    }
  }
  return sweep;
}

}  // namespace hermcat::witt
