#pragma once

#include <cstdint>
#include <string>

#include "hermcat/algebra/rational.hpp"

namespace hermcat::algebra {

// a + b·√d. For ℚ itself b is always zero.
struct QuadNumber {
  Rational a;
  Rational b;

  friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
};

// ℚ, or ℚ(√d) for a non-square rational d (stored as its square-free part).
class RationalField {
 public:
  using Elem = QuadNumber;
  static constexpr bool is_finite = false;

  RationalField() = default;
  static RationalField rationals() { return RationalField(); }
  // Throws InvalidInput when d is a rational square.
  static RationalField quadratic(const Rational& d);

  bool is_quadratic() const { return d_ != 0; }
  const Integer& radicand() const { return d_; }

  Elem zero() const { return {}; }
  Elem one() const { return {1, 0}; }
  Elem add(const Elem& x, const Elem& y) const { return {x.a + y.a, x.b + y.b}; }
  Elem sub(const Elem& x, const Elem& y) const { return {x.a - y.a, x.b - y.b}; }
  Elem neg(const Elem& x) const { return {-x.a, -x.b}; }
  Elem mul(const Elem& x, const Elem& y) const {
    if (d_ == 0) return {x.a * y.a, 0};
    return {x.a * y.a + Rational(d_) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  // Throws NotInvertible on zero.
  Elem inv(const Elem& x) const;
  bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }
  Elem from_int(std::int64_t v) const { return {Rational(v), 0}; }
  Elem from_rational(const Rational& r) const { return {r, 0}; }
  // Nontrivial automorphism of ℚ(√d); the identity on ℚ.
  Elem conjugate(const Elem& x) const { return {x.a, -x.b}; }

  std::string format(const Elem& x) const;
  std::string describe() const;

  friend bool operator==(const RationalField& x, const RationalField& y) { return x.d_ == y.d_; }

 private:
  Integer d_ = 0;
};

}  // namespace hermcat::algebra
