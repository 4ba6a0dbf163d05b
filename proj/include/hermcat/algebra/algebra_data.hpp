#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

// Raw presentation of an algebra with involution over a base field:
//   e_i·e_j = Σ_k structure[(i·dim + j)·dim + k] e_k
//   σ(e_j)  = Σ_i involution[i·dim + j] e_i   (columns are images)
// Only shapes are checked on construction; see validate_algebra for axioms.
template <class Field>
struct AlgebraData {
  using Scalar = typename Field::Elem;

  Field field;
  int dim = 0;
  std::vector<Scalar> structure;
  std::vector<Scalar> unit;
  std::vector<Scalar> involution;

  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;

  const Scalar& c(int i, int j, int k) const {
    return structure[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  const Scalar& sigma(int i, int j) const { return involution[static_cast<std::size_t>(i) * dim + j]; }

  void check_shape() const {
    if (dim < 1) throw InvalidInput("algebra dimension must be positive");
    const std::size_t m = static_cast<std::size_t>(dim);
    if (structure.size() != m * m * m) {
      throw DimensionMismatch("structure constants must have dim^3 = " + std::to_string(m * m * m) + " entries");
    }
    if (unit.size() != m) throw DimensionMismatch("unit must have dim entries");
    if (involution.size() != m * m) throw DimensionMismatch("involution must be a dim x dim matrix");
  }

  // Coefficient-level product and involution, shared by every algebra model.
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> r(dim, field.zero());
    for (int i = 0; i < dim; ++i) {
      if (field.is_zero(x[i])) continue;
      for (int j = 0; j < dim; ++j) {
        if (field.is_zero(y[j])) continue;
        const Scalar xy = field.mul(x[i], y[j]);
        for (int k = 0; k < dim; ++k) {
          const Scalar& ck = c(i, j, k);
          if (!field.is_zero(ck)) r[k] = field.add(r[k], field.mul(xy, ck));
        }
      }
    }
    return r;
  }

  std::vector<Scalar> apply_sigma(const std::vector<Scalar>& x) const {
    std::vector<Scalar> r(dim, field.zero());
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (!field.is_zero(x[j])) r[i] = field.add(r[i], field.mul(sigma(i, j), x[j]));
      }
    }
    return r;
  }
};

}  // namespace hermcat::algebra
