#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

namespace hermcat::algebra {

template <class A>
concept InvolutiveAlgebra = requires(const A& alg, const typename A::Element& x,
                                     const std::vector<typename A::Scalar>& coeffs,
                                     const typename A::Scalar& s, int i) {
  typename A::Field;
  typename A::Scalar;
  typename A::Element;
  { A::is_finite } -> std::convertible_to<bool>;
  { alg.dim() } -> std::convertible_to<int>;
  { alg.field() } -> std::convertible_to<const typename A::Field&>;
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.one() } -> std::same_as<typename A::Element>;
  { alg.basis(i) } -> std::same_as<typename A::Element>;
  { alg.add(x, x) } -> std::same_as<typename A::Element>;
  { alg.sub(x, x) } -> std::same_as<typename A::Element>;
  { alg.neg(x) } -> std::same_as<typename A::Element>;
  { alg.mul(x, x) } -> std::same_as<typename A::Element>;
  { alg.conj(x) } -> std::same_as<typename A::Element>;
  { alg.is_zero(x) } -> std::convertible_to<bool>;
  { alg.coefficients(x) } -> std::same_as<std::vector<typename A::Scalar>>;
  { alg.from_coefficients(coeffs) } -> std::same_as<typename A::Element>;
  { alg.embed(s) } -> std::same_as<typename A::Element>;
  { alg.from_int(std::int64_t{}) } -> std::same_as<typename A::Element>;
  { x == x } -> std::convertible_to<bool>;
};

template <class A>
concept FiniteInvolutiveAlgebra = InvolutiveAlgebra<A> && A::is_finite && requires(const A& alg, std::uint64_t i,
                                                                                    const typename A::Element& x) {
  { alg.size() } -> std::convertible_to<std::uint64_t>;
  { alg.element(i) } -> std::same_as<typename A::Element>;
  { alg.index(x) } -> std::convertible_to<std::uint64_t>;
};

}  // namespace hermcat::algebra
