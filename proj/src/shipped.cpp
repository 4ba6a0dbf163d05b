#include "hermcat/algebra/shipped.hpp"

#include "hermcat/support/errors.hpp"

namespace hermcat::algebra {

AlgebraData<FiniteField> field_extension_data(std::uint32_t p, const std::vector<std::uint32_t>& modulus,
                                              bool frobenius) {
  const FiniteField big(p, modulus);
  const FiniteField k = FiniteField::prime(p);
  const int e = big.degree();
  if (frobenius && e != 2) throw InvalidInput("the Frobenius is an involution only on quadratic extensions");

  // The digit vector of a code in `big` is its coordinate vector on 1, t, …
  auto basis_code = [&](int i) {
    std::vector<std::uint32_t> d(e, 0);
    d[i] = 1;
    return big.from_digits(d);
  };
  AlgebraData<FiniteField> out{k, e, std::vector<std::uint32_t>(static_cast<std::size_t>(e) * e * e, 0),
                               std::vector<std::uint32_t>(e, 0), std::vector<std::uint32_t>(static_cast<std::size_t>(e) * e, 0)};
  out.unit[0] = 1;
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) {
      const auto prod = big.digits(big.mul(basis_code(i), basis_code(j)));
      for (int l = 0; l < e; ++l) out.structure[(static_cast<std::size_t>(i) * e + j) * e + l] = prod[l];
    }
    auto image = basis_code(i);
    if (frobenius) {
      auto x = image;
      for (std::uint32_t t = 1; t < p; ++t) image = big.mul(image, x);
    }
    const auto col = big.digits(image);
    for (int l = 0; l < e; ++l) out.involution[static_cast<std::size_t>(l) * e + i] = col[l];
  }
  return out;
}

AlgebraData<RationalField> quadratic_conjugation_data(const Rational& d) {
  if (d == 0 || is_rational_square(d)) throw InvalidInput("radicand must be a non-square rational");
  const RationalField q;
  const auto z = q.zero(), one = q.one();
  AlgebraData<RationalField> out{q, 2, std::vector(8, z), {one, z}, {one, z, z, q.neg(one)}};
  out.structure[(0 * 2 + 0) * 2 + 0] = one;
  out.structure[(0 * 2 + 1) * 2 + 1] = one;
  out.structure[(1 * 2 + 0) * 2 + 1] = one;
  out.structure[(1 * 2 + 1) * 2 + 0] = q.from_rational(d);
  return out;
}

FiniteAlgebra prime_field_algebra(std::uint32_t p) { return FiniteAlgebra(base_field_data(FiniteField::prime(p))); }

FiniteAlgebra gf9_frobenius() { return FiniteAlgebra(field_extension_data(3, {1, 0, 1}, true)); }

FiniteAlgebra quadratic_frobenius_algebra(std::uint32_t p) {
  return FiniteAlgebra(field_extension_data(p, first_irreducible(p, 2), true));
}

RationalAlgebra rational_algebra() { return RationalAlgebra(base_field_data(RationalField())); }

std::vector<ShippedAlgebra> shipped_algebra_names() {
  return {
      {"gf3", "F_3 with the identity involution"},
      {"gf5", "F_5 with the identity involution"},
      {"gf9-frobenius", "F_9 = F_3[t]/(t^2+1) over F_3 with the Frobenius involution"},
      {"gf9-identity", "F_9 = F_3[t]/(t^2+1) over F_3 with the identity involution"},
      {"gf25-frobenius", "F_25 = F_5[t]/(t^2+2) over F_5 with the Frobenius involution"},
      {"m2-gf3-transpose", "M_2(F_3) with the transpose involution"},
      {"split-gf3", "F_3 x F_3 with the exchange involution"},
      {"quaternions-gf3", "(-1,-1) quaternions over F_3 with the canonical involution"},
      {"q", "Q with the identity involution"},
      {"q-sqrt2-conjugation", "Q(sqrt 2) over Q with the conjugation"},
      {"quaternions-q", "Hamilton quaternions (-1,-1) over Q with the canonical involution"},
      {"m2-q-transpose", "M_2(Q) with the transpose involution"},
  };
}

bool is_rational_shipped(const std::string& name) {
  return name == "q" || name == "q-sqrt2-conjugation" || name == "quaternions-q" || name == "m2-q-transpose";
}

FiniteAlgebra shipped_finite(const std::string& name) {
  const auto f3 = FiniteField::prime(3);
  if (name == "gf3") return prime_field_algebra(3);
  if (name == "gf5") return prime_field_algebra(5);
  if (name == "gf9-frobenius") return gf9_frobenius();
  if (name == "gf9-identity") return FiniteAlgebra(field_extension_data(3, {1, 0, 1}, false));
  if (name == "gf25-frobenius") return FiniteAlgebra(field_extension_data(5, {2, 0, 1}, true));
  if (name == "m2-gf3-transpose") return FiniteAlgebra(matrix_algebra_data(f3, 2));
  if (name == "split-gf3") return FiniteAlgebra(split_quadratic_data(f3));
  if (name == "quaternions-gf3") return FiniteAlgebra(quaternion_data(f3, f3.from_int(-1), f3.from_int(-1)));
  throw InvalidInput("unknown finite algebra '" + name + "'");
}

RationalAlgebra shipped_rational(const std::string& name) {
  const RationalField q;
  if (name == "q") return rational_algebra();
  if (name == "q-sqrt2-conjugation") return RationalAlgebra(quadratic_conjugation_data(2));
  if (name == "quaternions-q") return RationalAlgebra(quaternion_data(q, q.from_int(-1), q.from_int(-1)));
  if (name == "m2-q-transpose") return RationalAlgebra(matrix_algebra_data(q, 2));
  throw InvalidInput("unknown rational algebra '" + name + "'");
}

}  // namespace hermcat::algebra
