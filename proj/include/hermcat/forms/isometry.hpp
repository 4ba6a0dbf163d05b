#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/forms/system.hpp"
#include "hermcat/support/budget.hpp"

namespace hermcat::forms {


// Isometry invariants that are cheap to compute: rank, the ε for which each
// Gram is ε-hermitian, and the base-field rank of each Gram.
template <InvolutiveAlgebra A>
std::vector<long> isometry_invariants(const SesquilinearSystem<A>& form) {
  std::vector<long> inv{static_cast<long>(form.rank), static_cast<long>(form.index_count())};
  for (std::size_t i = 0; i < form.index_count(); ++i) {
    const auto single = make_form(form.algebra, form.grams[i]);
    inv.push_back(is_epsilon_hermitian(single, 1));
    inv.push_back(is_epsilon_hermitian(single, -1));
    inv.push_back(static_cast<long>(algebra::module_rank(form.algebra, form.grams[i])));
  }
  return inv;
}

// Column-by-column backtracking search for P with P^† S_i(target) P = S_i(source).
// Candidate columns are scanned in lexicographic order, so the first isometry
// found is the lexicographically least one (as a column list).
template <EnumerableAlgebra A>
class IsometrySearch {
 public:
  using Element = typename A::Element;

  IsometrySearch(const SesquilinearSystem<A>& target, Budget& budget = Budget::unlimited())
      : target_(target), budget_(budget) {
    const auto& alg = target.algebra;
    const std::size_t n = target.rank;
    vector_count_ = saturating_pow(alg.size(), n);
    budget_.require(saturating_mul(vector_count_, n * n * target.index_count() + 1), "isometry search setup");
    vectors_.reserve(vector_count_ * n);
    w_.reserve(vector_count_ * n * target.index_count());
    u_.reserve(vector_count_ * n * target.index_count());
    for (std::uint64_t code = 0; code < vector_count_; ++code) {
      std::vector<Element> v(n);
      std::uint64_t c = code;
      for (std::size_t k = n; k-- > 0;) {
        v[k] = alg.element(c % alg.size());
        c /= alg.size();
      }
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < target.index_count(); ++i) {
        const auto& s = target.grams[i];
        Element diag = alg.zero();
        for (std::size_t r = 0; r < n; ++r) {
          Element wr = alg.zero();  // (S v)_r
          Element ur = alg.zero();  // (v^† S)_r
          for (std::size_t l = 0; l < n; ++l) {
            wr = alg.add(wr, alg.mul(s(r, l), v[l]));
            ur = alg.add(ur, alg.mul(alg.conj(v[l]), s(l, r)));
          }
          w_.push_back(wr);
          u_.push_back(ur);
          diag = alg.add(diag, alg.mul(alg.conj(v[r]), wr));
        }
        key = key * alg.size() + alg.index(diag);
      }
      buckets_[key].push_back(code);
      for (auto& e : v) vectors_.push_back(std::move(e));
    }
    budget_.charge(saturating_mul(vector_count_, n * n * target.index_count() + 1), "isometry search setup");
    invariants_ = isometry_invariants(target);
  }

  const SesquilinearSystem<A>& target() const { return target_; }

  std::optional<MatrixOver<A>> find(const SesquilinearSystem<A>& source) {
    std::optional<MatrixOver<A>> found;
    for_each(source, [&](const MatrixOver<A>& p) {
      found = p;
      return false;
    });
    return found;
  }

  // Calls fn(P) for every isometry in lexicographic order until fn returns false.
  void for_each(const SesquilinearSystem<A>& source, const std::function<bool(const MatrixOver<A>&)>& fn) {
    require_compatible(source, target_, "isometry search");
    if (source.rank != target_.rank) return;
    if (isometry_invariants(source) != invariants_) return;
    source_ = &source;
    columns_.assign(target_.rank, 0);
    fn_ = &fn;
    stop_ = false;
    search(0);
    source_ = nullptr;
    fn_ = nullptr;
  }

 private:
  const Element& vec(std::uint64_t code, std::size_t k) const { return vectors_[code * target_.rank + k]; }
  const Element& w(std::uint64_t code, std::size_t i, std::size_t r) const {
    return w_[(code * target_.index_count() + i) * target_.rank + r];
  }
  const Element& u(std::uint64_t code, std::size_t i, std::size_t r) const {
    return u_[(code * target_.index_count() + i) * target_.rank + r];
  }

  MatrixOver<A> matrix_of(std::size_t ncols) const {
    const std::size_t n = target_.rank;
    auto p = algebra::zero_matrix(target_.algebra, n, ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      for (std::size_t r = 0; r < n; ++r) p(r, c) = vec(columns_[c], r);
    }
    return p;
  }

  void search(std::size_t j) {
    const auto& alg = target_.algebra;
    const std::size_t n = target_.rank;
    if (j == n) {
      if (!(*fn_)(matrix_of(n))) stop_ = true;
      return;
    }
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < source_->index_count(); ++i) key = key * alg.size() + alg.index(source_->grams[i](j, j));
    const auto it = buckets_.find(key);
    if (it == buckets_.end()) return;
    budget_.charge(it->second.size(), "isometry search");
    for (std::uint64_t code : it->second) {
      bool ok = true;
      for (std::size_t k = 0; k < j && ok; ++k) {
        const std::uint64_t pk = columns_[k];
        for (std::size_t i = 0; i < source_->index_count() && ok; ++i) {
          // p_k^† S p_j and p_j^† S p_k
          Element kj = alg.zero(), jk = alg.zero();
          for (std::size_t r = 0; r < n; ++r) {
            kj = alg.add(kj, alg.mul(alg.conj(vec(pk, r)), w(code, i, r)));
            jk = alg.add(jk, alg.mul(u(code, i, r), vec(pk, r)));
          }
          ok = kj == source_->grams[i](k, j) && jk == source_->grams[i](j, k);
        }
      }
      if (!ok) continue;
      columns_[j] = code;
      // The first j+1 columns of an invertible matrix define an injective map.
      if (algebra::module_rank(alg, matrix_of(j + 1)) != (j + 1) * static_cast<std::size_t>(alg.dim())) continue;
      search(j + 1);
      if (stop_) return;
    }
  }

  SesquilinearSystem<A> target_;
  Budget& budget_;
  std::uint64_t vector_count_ = 0;
  std::vector<Element> vectors_, w_, u_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets_;
  std::vector<long> invariants_;

  const SesquilinearSystem<A>* source_ = nullptr;
  const std::function<bool(const MatrixOver<A>&)>* fn_ = nullptr;
  std::vector<std::uint64_t> columns_;
  bool stop_ = false;
};

// An invertible P with P^† S_i(b) P = S_i(a) for all i, or nullopt.
template <EnumerableAlgebra A>
std::optional<ModuleMap<A>> is_isometric_bruteforce(const SesquilinearSystem<A>& a, const SesquilinearSystem<A>& b,
                                                    Budget& budget = Budget::unlimited()) {
  require_compatible(a, b, "isometry test");
  if (a.rank != b.rank) return std::nullopt;
  if (a.grams == b.grams) return algebra::identity(a.algebra, a.rank);
  if (isometry_invariants(a) != isometry_invariants(b)) return std::nullopt;
  IsometrySearch<A> search(b, budget);
  return search.find(a);
}

template <InvolutiveAlgebra A>
std::optional<ModuleMap<A>> is_isometric_bruteforce(const SesquilinearSystem<A>&, const SesquilinearSystem<A>&,
                                                    Budget& = Budget::unlimited())
  requires(!A::is_finite)
{
  throw InfiniteBase("isometry testing needs a finite base field");
}

}  // namespace hermcat::forms
