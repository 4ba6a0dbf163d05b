#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermcat::algebra {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "n", "-n" and "n/d".
Rational parse_rational(std::string_view text);

// Integers print bare, everything else as "num/den" in lowest terms.
std::string format_rational(const Rational& r);

// Signed square-free integer s with r = s·t² for some rational t; r must be non-zero.
Integer square_class(const Rational& r);

bool is_rational_square(const Rational& r);

}  // namespace hermcat::algebra
