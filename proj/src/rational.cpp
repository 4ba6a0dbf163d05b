#include "hermcat/algebra/rational.hpp"

#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw InvalidInput("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidInput("malformed integer literal '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(text.substr(start)));
  return text[0] == '-' ? Integer(-value) : value;
}

Integer squarefree_part(Integer n) {
  Integer result = 1;
  for (Integer d = 2; d * d <= n; ++d) {
    int exponent = 0;
    while (n % d == 0) {
      n /= d;
      ++exponent;
    }
    if (exponent % 2 == 1) result *= d;
  }
  return result * n;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer square_class(const Rational& r) {
  if (r == 0) throw InvalidInput("zero has no square class");
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  // num/den ≡ num·den modulo squares.
  Integer product = num * den;
  const bool negative = product < 0;
  if (negative) product = -product;
  Integer part = squarefree_part(product);
  return negative ? Integer(-part) : part;
}

bool is_rational_square(const Rational& r) {
  if (r == 0) return true;
  return square_class(r) == 1;
}

}  // namespace hermcat::algebra
