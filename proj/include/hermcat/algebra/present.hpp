#pragma once

#include <type_traits>
#include <utility>

#include "hermcat/algebra/algebra_data.hpp"
#include "hermcat/algebra/coefficient_algebra.hpp"
#include "hermcat/algebra/finite_algebra.hpp"

namespace hermcat::algebra {

// The algebra model used for algebras built at runtime (endomorphism rings,
// scalar extensions): tabulated codes over finite fields, coefficient vectors otherwise.
template <class Field>
auto present_algebra(AlgebraData<Field> data) {
  if constexpr (std::is_same_v<Field, FiniteField>) {
    return FiniteAlgebra(std::move(data));
  } else {
    return CoefficientAlgebra<Field>(std::move(data));
  }
}

template <class Field>
using PresentedOver = decltype(present_algebra(std::declval<AlgebraData<Field>>()));

}  // namespace hermcat::algebra
