#include "hermcat/algebra/finite_field.hpp"

#include <sstream>

#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b, b non-zero with trimmed leading coefficient.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const int degree = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..⌊deg/2⌋.
  for (int d = 1; 2 * d <= degree; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> first_irreducible(std::uint32_t p, int degree) {
  if (degree < 1) throw InvalidInput("extension degree must be at least 1");
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(degree + 1, 0);
    std::uint64_t c = code;
    for (int i = degree - 1; i >= 0; --i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[degree] = 1;
    if (is_irreducible_mod_p(p, f)) return f;
  }
  throw InvalidInput("no irreducible polynomial found");
}

FiniteField FiniteField::prime(std::uint32_t p) { return FiniteField(p, {0, 1}); }

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidInput("characteristic 2 is not supported");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2) throw InvalidInput("field modulus must have degree at least 1");
  if (modulus.back() != 1) throw InvalidInput("field modulus must be monic");
  if (!is_irreducible_mod_p(p, modulus)) throw InvalidInput("field modulus is reducible over F_p");
  const int e = static_cast<int>(modulus.size()) - 1;
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 30)) throw InvalidInput("finite field too large");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = std::move(modulus);
  std::uint32_t one = 1;
  for (int i = 1; i < e; ++i) one *= p;
  impl->one = one;
  impl_ = impl;

  if (q <= kTableLimit) {
    std::vector<Elem> add(q * q), mul(q * q), neg(q);
    for (Elem a = 0; a < q; ++a) {
      neg[a] = neg_slow(a);
      for (Elem b = 0; b < q; ++b) {
        add[a * q + b] = add_slow(a, b);
        mul[a * q + b] = mul_slow(a, b);
      }
    }
    impl->add = std::move(add);
    impl->mul = std::move(mul);
    impl->neg = std::move(neg);
  }
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> d(impl_->e);
  for (int i = impl_->e - 1; i >= 0; --i) {
    d[i] = a % impl_->p;
    a /= impl_->p;
  }
  return d;
}

FiniteField::Elem FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  if (static_cast<int>(d.size()) != impl_->e) {
    throw DimensionMismatch("expected " + std::to_string(impl_->e) + " coefficients for " + describe());
  }
  Elem code = 0;
  for (std::uint32_t c : d) {
    if (c >= impl_->p) throw InvalidInput("coefficient out of range for " + describe());
    code = code * impl_->p + c;
  }
  return code;
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  const std::int64_t r = ((v % p) + p) % p;
  return static_cast<Elem>(r) * impl_->one;
}

FiniteField::Elem FiniteField::add_slow(Elem a, Elem b) const {
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint32_t> s(impl_->e);
  for (int i = 0; i < impl_->e; ++i) s[i] = (da[i] + db[i]) % impl_->p;
  return from_digits(s);
}

FiniteField::Elem FiniteField::neg_slow(Elem a) const {
  auto d = digits(a);
  for (auto& c : d) c = (impl_->p - c) % impl_->p;
  return from_digits(d);
}

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  const auto da = digits(a), db = digits(b);
  const std::uint32_t p = impl_->p;
  Poly product(2 * impl_->e, 0);
  for (int i = 0; i < impl_->e; ++i) {
    for (int j = 0; j < impl_->e; ++j) {
      product[i + j] =
          static_cast<std::uint32_t>((product[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    }
  }
  Poly r = poly_mod(product, impl_->modulus, p);
  r.resize(impl_->e, 0);
  return from_digits(r);
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw NotInvertible("zero has no inverse in " + describe());
  // a^(q−2)
  Elem result = one(), base = a;
  for (std::uint64_t e = impl_->q - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string FiniteField::describe() const {
  std::ostringstream out;
  out << "F_" << impl_->q;
  if (impl_->e > 1) {
    out << " = F_" << impl_->p << "[x]/(";
    bool first = true;
    for (int i = impl_->e; i >= 0; --i) {
      const auto c = impl_->modulus[i];
      if (c == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (c != 1 || i == 0) out << c;
      if (i > 0) out << (c != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    out << ")";
  }
  return out.str();
}

}  // namespace hermcat::algebra
