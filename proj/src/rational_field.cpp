#include "hermcat/algebra/rational_field.hpp"

#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

RationalField RationalField::quadratic(const Rational& d) {
  if (d == 0 || is_rational_square(d)) {
    throw InvalidInput("quadratic extension needs a non-square radicand, got " + format_rational(d));
  }
  RationalField f;
  f.d_ = square_class(d);
  return f;
}

RationalField::Elem RationalField::inv(const Elem& x) const {
  if (is_zero(x)) throw NotInvertible("zero has no inverse in " + describe());
  if (d_ == 0) return {1 / x.a, 0};
  const Rational norm = x.a * x.a - Rational(d_) * x.b * x.b;
  return {x.a / norm, -x.b / norm};
}

std::string RationalField::format(const Elem& x) const {
  if (d_ == 0 || x.b == 0) return format_rational(x.a);
  std::string s;
  if (x.a != 0) s = format_rational(x.a) + (x.b > 0 ? "+" : "");
  s += format_rational(x.b) + "*sqrt(" + d_.str() + ")";
  return s;
}

std::string RationalField::describe() const {
  if (d_ == 0) return "Q";
  return "Q(sqrt(" + d_.str() + "))";
}

}  // namespace hermcat::algebra
