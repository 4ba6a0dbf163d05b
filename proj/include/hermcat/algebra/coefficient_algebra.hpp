#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hermcat/algebra/algebra_data.hpp"
#include "hermcat/algebra/finite_field.hpp"
#include "hermcat/algebra/rational_field.hpp"

namespace hermcat::algebra {

// Elements are plain coefficient vectors; every product goes through the
// structure constants. Works over any base field.
template <class BaseField>
class CoefficientAlgebra {
 public:
  using Field = BaseField;
  using Scalar = typename Field::Elem;
  using Element = std::vector<Scalar>;
  static constexpr bool is_finite = Field::is_finite;

  explicit CoefficientAlgebra(AlgebraData<Field> data)
      : data_(std::make_shared<const AlgebraData<Field>>(std::move(data))) {
    data_->check_shape();
  }

  int dim() const { return data_->dim; }
  const Field& field() const { return data_->field; }
  const AlgebraData<Field>& data() const { return *data_; }

  Element zero() const { return Element(dim(), field().zero()); }
  Element one() const { return data_->unit; }
  Element basis(int i) const {
    Element e = zero();
    e[i] = field().one();
    return e;
  }
  Element add(const Element& x, const Element& y) const {
    Element r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = field().add(x[i], y[i]);
    return r;
  }
  Element sub(const Element& x, const Element& y) const {
    Element r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = field().sub(x[i], y[i]);
    return r;
  }
  Element neg(const Element& x) const {
    Element r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = field().neg(x[i]);
    return r;
  }
  Element mul(const Element& x, const Element& y) const { return data_->multiply(x, y); }
  Element conj(const Element& x) const { return data_->apply_sigma(x); }
  bool is_zero(const Element& x) const {
    for (const auto& c : x) {
      if (!field().is_zero(c)) return false;
    }
    return true;
  }
  std::vector<Scalar> coefficients(const Element& x) const { return x; }
  Element from_coefficients(const std::vector<Scalar>& c) const {
    if (static_cast<int>(c.size()) != dim()) throw DimensionMismatch("coefficient vector has wrong length");
    return c;
  }
  Element embed(const Scalar& s) const {
    Element r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = field().mul(s, data_->unit[i]);
    return r;
  }
  Element from_int(std::int64_t v) const { return embed(field().from_int(v)); }

  // Enumeration support over finite bases, in the same lexicographic order as FiniteAlgebra.
  std::uint64_t size() const
    requires Field::is_finite
  {
    std::uint64_t s = 1;
    for (int i = 0; i < dim(); ++i) s *= field().order();
    return s;
  }
  Element element(std::uint64_t index) const
    requires Field::is_finite
  {
    Element r(dim());
    for (int i = dim() - 1; i >= 0; --i) {
      r[i] = field().element(index % field().order());
      index /= field().order();
    }
    return r;
  }
  std::uint64_t index(const Element& x) const
    requires Field::is_finite
  {
    std::uint64_t code = 0;
    for (int i = 0; i < dim(); ++i) code = code * field().order() + field().index(x[i]);
    return code;
  }

 private:
  std::shared_ptr<const AlgebraData<Field>> data_;
};

using RationalAlgebra = CoefficientAlgebra<RationalField>;

}  // namespace hermcat::algebra
