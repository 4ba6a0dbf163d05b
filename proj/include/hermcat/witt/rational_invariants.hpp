#pragma once

#include <cstddef>
#include <vector>

#include "hermcat/algebra/coefficient_algebra.hpp"
#include "hermcat/algebra/rational.hpp"
#include "hermcat/forms/system.hpp"

namespace hermcat::witt {

using algebra::Integer;
using algebra::Rational;

using RationalMatrix = std::vector<std::vector<Rational>>;
// Coefficients from the constant term upwards.
using RationalPolynomial = std::vector<Rational>;

struct RationalSymmetricInvariants {
  std::size_t rank = 0;
  // Square-free representative of the determinant of the nondegenerate part.
  Integer determinant_class = 1;
  std::size_t positive = 0;
  std::size_t negative = 0;
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }

  friend bool operator==(const RationalSymmetricInvariants&, const RationalSymmetricInvariants&) = default;
};

// det(x·I − M) by the Faddeev–LeVerrier recursion; monic of degree n.
RationalPolynomial characteristic_polynomial(const RationalMatrix& m);

// Yun's algorithm: factors[i] is square-free and p = c · ∏ factors[i]^(i+1).
std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p);

// Number of distinct real roots in the open interval (lo, ∞) minus those in
// (hi, ∞), i.e. roots in (lo, hi], via Sturm sequences. Infinite endpoints are
// expressed with the flags.
std::size_t sturm_root_count(const RationalPolynomial& p, const Rational* lo, const Rational* hi);

// Rank, square class of the determinant of the nondegenerate part, and the
// inertia computed from the characteristic polynomial.
RationalSymmetricInvariants rational_symmetric_invariants(const RationalMatrix& gram);

// The same for a form over the shipped ℚ with trivial involution. Throws
// InvalidInput for other bases, nontrivial involutions, several Grams or
// non-symmetric Grams.
RationalSymmetricInvariants rational_symmetric_invariants(const forms::SesquilinearSystem<algebra::RationalAlgebra>& form);

}  // namespace hermcat::witt
