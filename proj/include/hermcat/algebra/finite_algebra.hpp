#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hermcat/algebra/algebra_data.hpp"
#include "hermcat/algebra/finite_field.hpp"

namespace hermcat::algebra {

// An algebra over a finite field whose elements are integer codes. The code of
// Σ cᵢ eᵢ reads (c₀, …, c_{m−1}) as a base-q numeral with c₀ most significant,
// so numeric order is the lexicographic order of coefficient vectors. Small
// algebras (at most kTableLimit elements) use precomputed operation tables.
class FiniteAlgebra {
 public:
  using Field = FiniteField;
  using Scalar = FiniteField::Elem;
  using Element = std::uint32_t;
  static constexpr bool is_finite = true;
  static constexpr std::uint64_t kTableLimit = 1024;
  static constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 31;

  explicit FiniteAlgebra(AlgebraData<FiniteField> data);

  int dim() const { return impl_->data.dim; }
  const FiniteField& field() const { return impl_->data.field; }
  const AlgebraData<FiniteField>& data() const { return impl_->data; }
  std::uint64_t size() const { return impl_->size; }
  bool has_tables() const { return !impl_->mul.empty(); }
  bool is_commutative() const { return impl_->commutative; }
  bool has_trivial_involution() const { return impl_->trivial_sigma; }

  Element element(std::uint64_t i) const { return static_cast<Element>(i); }
  std::uint64_t index(Element x) const { return x; }

  Element zero() const { return 0; }
  Element one() const { return impl_->one; }
  Element basis(int i) const { return impl_->basis[i]; }

  Element add(Element x, Element y) const {
    if (has_tables()) return impl_->add[x * impl_->size + y];
    return add_slow(x, y);
  }
  Element neg(Element x) const {
    if (has_tables()) return impl_->neg[x];
    return neg_slow(x);
  }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const {
    if (has_tables()) return impl_->mul[x * impl_->size + y];
    return mul_slow(x, y);
  }
  Element conj(Element x) const {
    if (has_tables()) return impl_->conj[x];
    return conj_slow(x);
  }
  bool is_zero(Element x) const { return x == 0; }

  // Two-sided inverse, if any.
  std::optional<Element> inverse(Element x) const;
  bool is_unit(Element x) const { return inverse(x).has_value(); }

  std::vector<Scalar> coefficients(Element x) const;
  Element from_coefficients(const std::vector<Scalar>& c) const;
  Element embed(Scalar s) const;
  Element from_int(std::int64_t v) const { return embed(field().from_int(v)); }

 private:
  struct Impl {
    explicit Impl(AlgebraData<FiniteField> d) : data(std::move(d)) {}
    AlgebraData<FiniteField> data;
    std::uint64_t size = 0;
    Element one = 0;
    std::vector<Element> basis;
    bool commutative = false;
    bool trivial_sigma = false;
    std::vector<Element> add, mul, neg, conj;
    // inverse table: size entries, size means "not a unit"
    std::vector<Element> inv;
  };

  Element add_slow(Element x, Element y) const;
  Element neg_slow(Element x) const;
  Element mul_slow(Element x, Element y) const;
  Element conj_slow(Element x) const;
  std::optional<Element> inverse_slow(Element x) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace hermcat::algebra
