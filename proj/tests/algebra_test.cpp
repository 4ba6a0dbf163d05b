#include <gtest/gtest.h>

#include <random>

#include "hermcat/algebra/coefficient_algebra.hpp"
#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/algebra/finite_algebra.hpp"
#include "hermcat/algebra/matrix.hpp"
#include "hermcat/algebra/shipped.hpp"
#include "hermcat/algebra/validate.hpp"

using namespace hermcat;
using namespace hermcat::algebra;

namespace {

// 𝔽₉ = 𝔽₃[i]/(i²+1) written out by hand: (a, b) = a + b·i.
struct Gf9 {
  int a, b;
  friend bool operator==(const Gf9&, const Gf9&) = default;
};
Gf9 gf9_mul(Gf9 x, Gf9 y) { return {((x.a * y.a - x.b * y.b) % 3 + 3) % 3, (x.a * y.b + x.b * y.a) % 3}; }
Gf9 gf9_frob(Gf9 x) { return gf9_mul(gf9_mul(x, x), x); }
Gf9 from_code(const FiniteAlgebra& alg, FiniteAlgebra::Element e) {
  const auto c = alg.coefficients(e);
  return {static_cast<int>(c[0]), static_cast<int>(c[1])};
}

}  // namespace

TEST(FiniteField, PrimeArithmetic) {
  const auto f = FiniteField::prime(7);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_THROW(f.inv(0), NotInvertible);
  EXPECT_THROW(FiniteField::prime(2), InvalidInput);
  EXPECT_THROW(FiniteField::prime(9), InvalidInput);
}

TEST(FiniteField, ModulusChecks) {
  EXPECT_THROW(FiniteField(3, {2, 0, 1}), InvalidInput);  // x² + 2 = (x+1)(x+2)
  EXPECT_NO_THROW(FiniteField(3, {1, 0, 1}));
  // x³ − x − 1 has no root mod 3.
  EXPECT_TRUE(is_irreducible_mod_p(3, std::vector<std::uint32_t>{2, 2, 0, 1}));
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_NE((x * x * x + 2 * x + 2) % 3, 0u);
  // A cubic is irreducible iff it has no root; scan (c₀, c₁, c₂) lexicographically.
  std::vector<std::uint32_t> expected;
  for (std::uint32_t c0 = 0; c0 < 3 && expected.empty(); ++c0) {
    for (std::uint32_t c1 = 0; c1 < 3 && expected.empty(); ++c1) {
      for (std::uint32_t c2 = 0; c2 < 3 && expected.empty(); ++c2) {
        bool root = false;
        for (std::uint32_t x = 0; x < 3; ++x) root |= (c0 + c1 * x + c2 * x * x + x * x * x) % 3 == 0;
        if (!root) expected = {c0, c1, c2, 1};
      }
    }
  }
  EXPECT_EQ(first_irreducible(3, 3), expected);
  EXPECT_EQ(first_irreducible(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FiniteField, ExtensionFieldInverses) {
  const FiniteField f(3, {2, 2, 0, 1});
  EXPECT_EQ(f.order(), 27u);
  for (std::uint32_t a = 1; a < 27; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
  // Code order is lexicographic on (a₀, a₁, a₂).
  EXPECT_EQ(f.digits(f.one()), (std::vector<std::uint32_t>{1, 0, 0}));
  EXPECT_EQ(f.from_digits(std::vector<std::uint32_t>{0, 1, 0}), 3u);
}

TEST(Rational, SquareClasses) {
  EXPECT_EQ(square_class(Rational(8)), 2);
  EXPECT_EQ(square_class(Rational(-12)), -3);
  EXPECT_EQ(square_class(parse_rational("3/4")), 3);
  EXPECT_EQ(square_class(parse_rational("2/3")), 6);
  EXPECT_TRUE(is_rational_square(parse_rational("9/4")));
  EXPECT_FALSE(is_rational_square(Rational(-1)));
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(ValidateAlgebra, PrimeFieldPasses) { EXPECT_TRUE(validate_algebra(prime_field_algebra(3).data()).ok()); }

TEST(ValidateAlgebra, Gf9FrobeniusMatchesHandTables) {
  const auto alg = gf9_frobenius();
  EXPECT_TRUE(validate_algebra(alg.data()).ok());
  for (std::uint64_t i = 0; i < 9; ++i) {
    const auto x = alg.element(i);
    EXPECT_EQ(from_code(alg, alg.conj(x)), gf9_frob(from_code(alg, x)));
    for (std::uint64_t j = 0; j < 9; ++j) {
      const auto y = alg.element(j);
      EXPECT_EQ(from_code(alg, alg.mul(x, y)), gf9_mul(from_code(alg, x), from_code(alg, y)));
      // σ(xy) = σ(x)σ(y) = σ(y)σ(x) in the commutative case.
      EXPECT_EQ(gf9_frob(gf9_mul(from_code(alg, x), from_code(alg, y))),
                gf9_mul(gf9_frob(from_code(alg, y)), gf9_frob(from_code(alg, x))));
    }
  }
}

TEST(ValidateAlgebra, Gf9IdentityInvolutionPasses) {
  EXPECT_TRUE(validate_algebra(shipped_finite("gf9-identity").data()).ok());
}

TEST(ValidateAlgebra, ReportsBrokenAssociativity) {
  auto d = matrix_algebra_data(FiniteField::prime(3), 2);
  // Make E₀₁·E₁₀ = 2·E₀₀ instead of E₀₀.
  d.structure[(1 * 4 + 2) * 4 + 0] = 2;
  const auto report = validate_algebra(d);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.kind == AxiomKind::Associativity) {
      found = true;
      EXPECT_EQ(v.basis_indices.size(), 3u);
    }
  }
  EXPECT_TRUE(found);
}

TEST(ValidateAlgebra, ReportsNonInvolution) {
  auto d = base_field_data(FiniteField::prime(5));
  d.involution[0] = 2;  // σ(1) = 2: σ² ≠ id and σ(1·1) ≠ σ(1)σ(1)
  const auto report = validate_algebra(d);
  ASSERT_FALSE(report.ok());
  bool square = false, anti = false;
  for (const auto& v : report.violations) {
    square |= v.kind == AxiomKind::InvolutionSquare;
    anti |= v.kind == AxiomKind::AntiMultiplicative;
  }
  EXPECT_TRUE(square);
  EXPECT_TRUE(anti);
}

TEST(ValidateAlgebra, AllShippedAlgebrasPass) {
  for (const auto& s : shipped_algebra_names()) {
    SCOPED_TRACE(s.name);
    if (is_rational_shipped(s.name)) {
      EXPECT_TRUE(validate_algebra(shipped_rational(s.name).data()).ok());
    } else {
      EXPECT_TRUE(validate_algebra(shipped_finite(s.name).data()).ok());
    }
  }
}

TEST(ValidateAlgebra, ElementwiseAxiomsOnFiniteShippedAlgebras) {
  for (const auto& s : shipped_algebra_names()) {
    if (is_rational_shipped(s.name)) continue;
    SCOPED_TRACE(s.name);
    const auto alg = shipped_finite(s.name);
    for (std::uint64_t i = 0; i < alg.size(); ++i) {
      const auto x = alg.element(i);
      ASSERT_EQ(alg.conj(alg.conj(x)), x);
      ASSERT_EQ(alg.mul(alg.one(), x), x);
      for (std::uint64_t j = 0; j < alg.size(); ++j) {
        const auto y = alg.element(j);
        ASSERT_EQ(alg.conj(alg.mul(x, y)), alg.mul(alg.conj(y), alg.conj(x)));
        ASSERT_EQ(alg.conj(alg.add(x, y)), alg.add(alg.conj(x), alg.conj(y)));
      }
    }
  }
}

TEST(Involution, QuadraticConjugation) {
  const auto alg = shipped_rational("q-sqrt2-conjugation");
  const RationalField q;
  const RationalAlgebra::Element a{q.one(), q.one()};  // 1 + √2
  EXPECT_EQ(alg.conj(a), (RationalAlgebra::Element{q.one(), q.from_int(-1)}));
  EXPECT_EQ(alg.conj(alg.conj(a)), a);
  // (1+√2)(1−√2) = −1
  EXPECT_EQ(alg.mul(a, alg.conj(a)), alg.from_int(-1));
}

TEST(Involution, TrivialIsIdentity) {
  const auto alg = prime_field_algebra(5);
  for (std::uint32_t x = 0; x < 5; ++x) EXPECT_EQ(alg.conj(x), x);
}

TEST(Involution, FrobeniusOfGenerator) {
  const auto alg = gf9_frobenius();
  const auto t = alg.basis(1);
  EXPECT_EQ(alg.conj(t), alg.mul(alg.mul(t, t), t));
  EXPECT_EQ(alg.conj(t), alg.neg(t));
}

TEST(Matrix, Products) {
  const auto alg = prime_field_algebra(3);
  const auto x = int_matrix(alg, {{1, 2}, {0, 1}});
  const auto y = int_matrix(alg, {{1, 0}, {1, 1}});
  EXPECT_EQ(mat_mul(alg, x, y), int_matrix(alg, {{0, 2}, {1, 1}}));
  EXPECT_EQ(mat_mul(alg, identity(alg, 2), x), x);
  const auto empty = zero_matrix(alg, 0, 2);
  const auto prod = mat_mul(alg, empty, x);
  EXPECT_EQ(prod.rows(), 0u);
  EXPECT_EQ(prod.cols(), 2u);
  EXPECT_THROW(mat_mul(alg, x, zero_matrix(alg, 3, 1)), DimensionMismatch);
  EXPECT_THROW(mat_add(alg, x, zero_matrix(alg, 2, 1)), DimensionMismatch);
}

TEST(Matrix, NoncommutativeProductOrder) {
  const auto alg = shipped_finite("quaternions-gf3");
  auto x = zero_matrix(alg, 1, 1), y = zero_matrix(alg, 1, 1);
  x(0, 0) = alg.basis(1);
  y(0, 0) = alg.basis(2);
  EXPECT_EQ(mat_mul(alg, x, y)(0, 0), alg.basis(3));
  EXPECT_EQ(mat_mul(alg, y, x)(0, 0), alg.neg(alg.basis(3)));
}

TEST(Matrix, ConjTranspose) {
  const auto q2 = shipped_rational("q-sqrt2-conjugation");
  EXPECT_EQ(conj_transpose(q2, identity(q2, 3)), identity(q2, 3));
  auto r = zero_matrix(q2, 1, 1);
  r(0, 0) = q2.basis(1);
  auto expected = zero_matrix(q2, 1, 1);
  expected(0, 0) = q2.neg(q2.basis(1));
  EXPECT_EQ(conj_transpose(q2, r), expected);

  const auto alg = gf9_frobenius();
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, alg.size() - 1);
  auto random = [&](std::size_t r, std::size_t c) {
    auto m = zero_matrix(alg, r, c);
    for (auto& e : m.entries()) e = alg.element(pick(rng));
    return m;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random(2, 3), y = random(3, 2);
    EXPECT_EQ(conj_transpose(alg, mat_mul(alg, x, y)),
              mat_mul(alg, conj_transpose(alg, y), conj_transpose(alg, x)));
    EXPECT_EQ(conj_transpose(alg, conj_transpose(alg, x)), x);
  }
}

TEST(Matrix, Inversion) {
  const auto alg = prime_field_algebra(3);
  EXPECT_EQ(mat_invert(alg, identity(alg, 2)), identity(alg, 2));
  EXPECT_EQ(mat_invert(alg, int_matrix(alg, {{2}})), int_matrix(alg, {{2}}));
  EXPECT_FALSE(mat_invert(alg, int_matrix(alg, {{0}})).has_value());
  EXPECT_THROW(mat_invert(alg, zero_matrix(alg, 1, 2)), DimensionMismatch);
  EXPECT_EQ(mat_invert(alg, zero_matrix(alg, 0, 0)), zero_matrix(alg, 0, 0));

  const auto q = shipped_rational("quaternions-q");
  auto x = zero_matrix(q, 2, 2);
  x(0, 0) = q.basis(1);
  x(0, 1) = q.one();
  x(1, 1) = q.basis(2);
  const auto y = mat_invert(q, x);
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(mat_mul(q, x, *y), identity(q, 2));
  EXPECT_EQ(mat_mul(q, *y, x), identity(q, 2));
}

TEST(RegularRepresentation, IdentityAndMultiplicativity) {
  const auto alg = shipped_finite("m2-gf3-transpose");
  EXPECT_EQ(regular_representation(alg, identity(alg, 2)), base_identity(alg.field(), 8));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, alg.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = zero_matrix(alg, 2, 2), y = zero_matrix(alg, 2, 2);
    for (auto& e : x.entries()) e = alg.element(pick(rng));
    for (auto& e : y.entries()) e = alg.element(pick(rng));
    EXPECT_EQ(regular_representation(alg, mat_mul(alg, x, y)),
              base_mul(alg.field(), regular_representation(alg, x), regular_representation(alg, y)));
  }
}

namespace {

// Independent invertibility oracle: search for a two-sided inverse.
template <class A>
bool has_inverse_by_search(const A& alg, const MatrixOver<A>& x) {
  const std::size_t n = x.rows();
  const auto count = saturating_pow(alg.size(), n * n);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto y = matrix_from_index(alg, n, n, i);
    if (mat_mul(alg, x, y) == identity(alg, n) && mat_mul(alg, y, x) == identity(alg, n)) return true;
  }
  return false;
}

}  // namespace

TEST(RegularRepresentation, InvertibilityAgreesExhaustively) {
  // n = 1 over 𝔽₉ and over 𝔽₃ × 𝔽₃, n ≤ 2 over 𝔽₃: brute-force inverse search.
  for (const char* name : {"gf9-frobenius", "split-gf3", "gf3"}) {
    SCOPED_TRACE(name);
    const auto alg = shipped_finite(name);
    for (std::size_t n = 1; n <= (alg.dim() == 1 ? 2u : 1u); ++n) {
      const auto count = saturating_pow(alg.size(), n * n);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto x = matrix_from_index(alg, n, n, i);
        const bool by_rr = base_inverse(alg.field(), regular_representation(alg, x)).has_value();
        ASSERT_EQ(mat_invert(alg, x).has_value(), by_rr);
        ASSERT_EQ(by_rr, has_inverse_by_search(alg, x));
      }
    }
  }
  // n = 2 over the commutative two-dimensional algebras: determinant criterion.
  for (const char* name : {"gf9-frobenius", "split-gf3"}) {
    SCOPED_TRACE(name);
    const auto alg = shipped_finite(name);
    const auto units = enumerate_elements(alg);
    for (std::uint64_t i = 0; i < saturating_pow(alg.size(), 4); ++i) {
      const auto x = matrix_from_index(alg, 2, 2, i);
      const auto det = alg.sub(alg.mul(x(0, 0), x(1, 1)), alg.mul(x(0, 1), x(1, 0)));
      bool det_unit = false;
      for (auto u : units) det_unit |= alg.mul(det, u) == alg.one();
      const auto inv = mat_invert(alg, x);
      ASSERT_EQ(inv.has_value(), det_unit);
      if (inv) {
        ASSERT_EQ(mat_mul(alg, x, *inv), identity(alg, 2));
        ASSERT_EQ(mat_mul(alg, *inv, x), identity(alg, 2));
      }
    }
  }
}

TEST(Enumerate, Units) {
  const auto f3 = prime_field_algebra(3);
  const auto u1 = enumerate_units(f3, 1);
  ASSERT_EQ(u1.size(), 2u);
  EXPECT_EQ(u1[0], int_matrix(f3, {{1}}));
  EXPECT_EQ(u1[1], int_matrix(f3, {{2}}));
  EXPECT_EQ(enumerate_elements(f3).size(), 3u);
  EXPECT_EQ(enumerate_units(f3, 2).size(), 48u);  // (9−1)(9−3)
  EXPECT_EQ(enumerate_units(gf9_frobenius(), 1).size(), 8u);
  EXPECT_EQ(enumerate_units(gf9_frobenius(), 2).size(), 5760u);  // (81−1)(81−9)
  EXPECT_EQ(enumerate_units(shipped_finite("m2-gf3-transpose"), 1).size(), 48u);
  EXPECT_EQ(enumerate_units(f3, 0).size(), 1u);
  EXPECT_THROW(enumerate_units(rational_algebra(), 1), InfiniteBase);
  EXPECT_THROW(enumerate_elements(rational_algebra()), InfiniteBase);
}

TEST(Enumerate, LexicographicOrder) {
  const auto alg = gf9_frobenius();
  const auto all = enumerate_elements(alg);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(alg.coefficients(all[i - 1]), alg.coefficients(all[i]));
  Budget tight(10);
  EXPECT_THROW(enumerate_units(alg, 2, tight), BudgetExceeded);
}

TEST(CoefficientRoute, AgreesWithTables) {
  for (const char* name : {"gf9-frobenius", "m2-gf3-transpose", "quaternions-gf3"}) {
    SCOPED_TRACE(name);
    const auto fast = shipped_finite(name);
    const CoefficientAlgebra<FiniteField> slow(fast.data());
    ASSERT_EQ(slow.size(), fast.size());
    for (std::uint64_t i = 0; i < fast.size(); ++i) {
      ASSERT_EQ(slow.index(slow.element(i)), i);
      ASSERT_EQ(fast.coefficients(fast.conj(fast.element(i))), slow.conj(slow.element(i)));
      for (std::uint64_t j = 0; j < fast.size(); ++j) {
        ASSERT_EQ(fast.coefficients(fast.mul(fast.element(i), fast.element(j))),
                  slow.mul(slow.element(i), slow.element(j)));
      }
    }
  }
}

TEST(FiniteAlgebra, UntabulatedMatchesTabulated) {
  // Force the slow path with M₂(𝔽₇).
  const auto big = FiniteAlgebra(matrix_algebra_data(FiniteField::prime(7), 2));
  ASSERT_FALSE(big.has_tables());
  const CoefficientAlgebra<FiniteField> slow(big.data());
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, big.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto i = pick(rng), j = pick(rng);
    EXPECT_EQ(big.coefficients(big.mul(big.element(i), big.element(j))), slow.mul(slow.element(i), slow.element(j)));
    const auto inv = big.inverse(big.element(i));
    if (inv) {
      EXPECT_EQ(big.mul(*inv, big.element(i)), big.one());
    }
  }
}
