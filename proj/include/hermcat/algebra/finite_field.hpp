#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hermcat::algebra {

bool is_prime(std::uint64_t n);

// Polynomials over 𝔽_p are coefficient vectors, lowest degree first.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> poly);

// The monic irreducible polynomial of the given degree whose lower coefficients
// (c₀, …, c_{d−1}) come first in lexicographic order.
std::vector<std::uint32_t> first_irreducible(std::uint32_t p, int degree);

// 𝔽_q with q = pᵉ, presented as 𝔽_p[x]/(modulus). An element is a code in
// [0, q): the coefficient vector (a₀, …, a_{e−1}) read as a base-p numeral
// with a₀ most significant, so code order is lexicographic coefficient order.
class FiniteField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_finite = true;
  static constexpr std::uint32_t kTableLimit = 1024;

  static FiniteField prime(std::uint32_t p);

  // modulus: monic, irreducible over 𝔽_p, degree e ≥ 1. Odd p only.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return impl_->p; }
  int degree() const { return impl_->e; }
  std::uint64_t order() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  bool is_prime_field() const { return impl_->e == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return impl_->one; }

  Elem add(Elem a, Elem b) const {
    if (!impl_->add.empty()) return impl_->add[a * impl_->q + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (!impl_->neg.empty()) return impl_->neg[a];
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (!impl_->mul.empty()) return impl_->mul[a * impl_->q + b];
    return mul_slow(a, b);
  }
  // Throws NotInvertible on zero.
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(std::int64_t v) const;
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  Elem element(std::uint64_t index) const { return static_cast<Elem>(index); }
  std::uint64_t index(Elem a) const { return a; }

  std::string describe() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    int e = 0;
    std::uint32_t q = 0;
    Elem one = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> add, mul, neg;
  };

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace hermcat::algebra
