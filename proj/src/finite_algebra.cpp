#include "hermcat/algebra/finite_algebra.hpp"

#include "hermcat/algebra/base_matrix.hpp"

namespace hermcat::algebra {

FiniteAlgebra::FiniteAlgebra(AlgebraData<FiniteField> data) {
  data.check_shape();
  auto impl = std::make_shared<Impl>(std::move(data));
  const auto& d = impl->data;
  std::uint64_t size = 1;
  for (int i = 0; i < d.dim; ++i) {
    size *= d.field.order();
    if (size >= kSizeLimit) throw InvalidInput("algebra has too many elements for exhaustive enumeration");
  }
  impl->size = size;
  impl_ = impl;
  impl->one = from_coefficients(d.unit);
  for (int i = 0; i < d.dim; ++i) {
    std::vector<Scalar> c(d.dim, 0);
    c[i] = d.field.one();
    impl->basis.push_back(from_coefficients(c));
  }
  impl->commutative = true;
  for (int i = 0; i < d.dim && impl->commutative; ++i) {
    for (int j = 0; j < d.dim && impl->commutative; ++j) {
      for (int k = 0; k < d.dim; ++k) {
        if (d.c(i, j, k) != d.c(j, i, k)) {
          impl->commutative = false;
          break;
        }
      }
    }
  }
  impl->trivial_sigma = true;
  for (int i = 0; i < d.dim; ++i) {
    for (int j = 0; j < d.dim; ++j) {
      if (d.sigma(i, j) != (i == j ? d.field.one() : d.field.zero())) impl->trivial_sigma = false;
    }
  }

  if (size <= kTableLimit) {
    std::vector<Element> add(size * size), mul(size * size), neg(size), conj(size), inv(size);
    for (Element x = 0; x < size; ++x) {
      neg[x] = neg_slow(x);
      conj[x] = conj_slow(x);
      for (Element y = 0; y < size; ++y) {
        add[x * size + y] = add_slow(x, y);
        mul[x * size + y] = mul_slow(x, y);
      }
    }
    for (Element x = 0; x < size; ++x) {
      inv[x] = static_cast<Element>(size);
      for (Element y = 0; y < size; ++y) {
        if (mul[x * size + y] == impl->one && mul[y * size + x] == impl->one) {
          inv[x] = y;
          break;
        }
      }
    }
    impl->add = std::move(add);
    impl->mul = std::move(mul);
    impl->neg = std::move(neg);
    impl->conj = std::move(conj);
    impl->inv = std::move(inv);
  }
}

std::vector<FiniteAlgebra::Scalar> FiniteAlgebra::coefficients(Element x) const {
  const auto q = field().order();
  std::vector<Scalar> c(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    c[i] = static_cast<Scalar>(x % q);
    x = static_cast<Element>(x / q);
  }
  return c;
}

FiniteAlgebra::Element FiniteAlgebra::from_coefficients(const std::vector<Scalar>& c) const {
  if (static_cast<int>(c.size()) != dim()) throw DimensionMismatch("coefficient vector has wrong length");
  const auto q = field().order();
  std::uint64_t code = 0;
  for (auto s : c) {
    if (s >= q) throw InvalidInput("coefficient out of range for " + field().describe());
    code = code * q + s;
  }
  return static_cast<Element>(code);
}

FiniteAlgebra::Element FiniteAlgebra::embed(Scalar s) const {
  std::vector<Scalar> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = field().mul(s, impl_->data.unit[i]);
  return from_coefficients(c);
}

FiniteAlgebra::Element FiniteAlgebra::add_slow(Element x, Element y) const {
  auto a = coefficients(x);
  const auto b = coefficients(y);
  for (int i = 0; i < dim(); ++i) a[i] = field().add(a[i], b[i]);
  return from_coefficients(a);
}

FiniteAlgebra::Element FiniteAlgebra::neg_slow(Element x) const {
  auto a = coefficients(x);
  for (auto& s : a) s = field().neg(s);
  return from_coefficients(a);
}

FiniteAlgebra::Element FiniteAlgebra::mul_slow(Element x, Element y) const {
  return from_coefficients(impl_->data.multiply(coefficients(x), coefficients(y)));
}

FiniteAlgebra::Element FiniteAlgebra::conj_slow(Element x) const {
  return from_coefficients(impl_->data.apply_sigma(coefficients(x)));
}

std::optional<FiniteAlgebra::Element> FiniteAlgebra::inverse(Element x) const {
  if (!impl_->inv.empty()) {
    const Element y = impl_->inv[x];
    if (y == impl_->size) return std::nullopt;
    return y;
  }
  return inverse_slow(x);
}

std::optional<FiniteAlgebra::Element> FiniteAlgebra::inverse_slow(Element x) const {
  // Solve x·y = 1 through the matrix of left multiplication by x.
  const auto& f = field();
  BaseMatrix<FiniteField> left(dim(), dim(), f.zero());
  for (int k = 0; k < dim(); ++k) {
    const auto col = coefficients(mul(x, basis(k)));
    for (int i = 0; i < dim(); ++i) left.at(i, k) = col[i];
  }
  auto y = base_solve(f, left, impl_->data.unit);
  if (!y) return std::nullopt;
  const Element candidate = from_coefficients(*y);
  if (mul(candidate, x) != one()) return std::nullopt;
  return candidate;
}

}  // namespace hermcat::algebra
