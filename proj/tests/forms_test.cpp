#include <gtest/gtest.h>

#include <random>

#include "hermcat/algebra/shipped.hpp"
#include "hermcat/forms/classify.hpp"
#include "hermcat/forms/isometry.hpp"
#include "hermcat/forms/system.hpp"

using namespace hermcat;
using namespace hermcat::algebra;
using namespace hermcat::forms;

namespace {

using Form = SesquilinearSystem<FiniteAlgebra>;
using Vec = std::vector<FiniteAlgebra::Element>;

Vec basis_vector(const FiniteAlgebra& alg, std::size_t n, std::size_t k) {
  Vec v(n, alg.zero());
  v[k] = alg.one();
  return v;
}

Vec scaled(const FiniteAlgebra& alg, Vec v, FiniteAlgebra::Element a) {
  for (auto& e : v) e = alg.mul(e, a);
  return v;
}

// u^† y for column vectors
FiniteAlgebra::Element pair(const FiniteAlgebra& alg, const Vec& u, const Vec& y) {
  auto t = alg.zero();
  for (std::size_t k = 0; k < u.size(); ++k) t = alg.add(t, alg.mul(alg.conj(u[k]), y[k]));
  return t;
}

Vec apply(const FiniteAlgebra& alg, const MatrixOver<FiniteAlgebra>& m, const Vec& x) {
  Vec r(m.rows(), alg.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] = alg.add(r[i], alg.mul(m(i, j), x[j]));
  }
  return r;
}

std::vector<Form> all_forms(const FiniteAlgebra& alg, std::size_t rank, std::size_t index_count) {
  std::vector<Form> out;
  for (std::uint64_t i = 0; i < tuple_count(alg, rank, index_count); ++i) out.push_back(tuple_at(alg, rank, index_count, i));
  return out;
}

// Independent oracle: scan every square matrix, demand an explicit inverse.
bool isometric_by_scan(const Form& a, const Form& b) {
  const auto& alg = a.algebra;
  const std::size_t n = a.rank;
  const auto count = saturating_pow(alg.size(), n * n);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto p = matrix_from_index(alg, n, n, i);
    bool ok = true;
    for (std::size_t g = 0; g < a.index_count() && ok; ++g) {
      ok = mat_mul(alg, conj_transpose(alg, p), mat_mul(alg, b.grams[g], p)) == a.grams[g];
    }
    if (!ok) continue;
    for (std::uint64_t j = 0; j < count; ++j) {
      const auto q = matrix_from_index(alg, n, n, j);
      if (mat_mul(alg, p, q) == identity(alg, n)) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Evaluate, Examples) {
  const auto f3 = prime_field_algebra(3);
  EXPECT_EQ(evaluate(diagonal_form(f3, {1}), 0, {1}, {1}), 1u);
  const auto s = make_form(f3, int_matrix(f3, {{0, 1}, {0, 0}}));
  EXPECT_EQ(evaluate(s, 0, basis_vector(f3, 2, 0), basis_vector(f3, 2, 1)), 1u);
  EXPECT_EQ(evaluate(s, 0, basis_vector(f3, 2, 1), basis_vector(f3, 2, 0)), 0u);
  EXPECT_THROW(evaluate(s, 1, basis_vector(f3, 2, 0), basis_vector(f3, 2, 0)), DimensionMismatch);
  EXPECT_THROW(evaluate(s, 0, {1}, basis_vector(f3, 2, 0)), DimensionMismatch);
}

TEST(Evaluate, SesquilinearityExhaustive) {
  for (const char* name : {"gf3", "gf9-frobenius"}) {
    SCOPED_TRACE(name);
    const auto alg = shipped_finite(name);
    for (const auto& form : all_forms(alg, 1, 1)) {
      for (std::uint64_t a = 0; a < alg.size(); ++a) {
        for (std::uint64_t b = 0; b < alg.size(); ++b) {
          for (std::uint64_t x = 0; x < alg.size(); ++x) {
            for (std::uint64_t y = 0; y < alg.size(); ++y) {
              const Vec xv{alg.element(x)}, yv{alg.element(y)};
              const auto lhs = evaluate(form, 0, scaled(alg, xv, alg.element(a)), scaled(alg, yv, alg.element(b)));
              const auto rhs = alg.mul(alg.mul(alg.conj(alg.element(a)), evaluate(form, 0, xv, yv)), alg.element(b));
              ASSERT_EQ(lhs, rhs);
            }
          }
        }
      }
    }
  }
}

TEST(Adjoints, DefiningIdentitiesExhaustive) {
  for (const char* name : {"gf3", "gf9-frobenius"}) {
    SCOPED_TRACE(name);
    const auto alg = shipped_finite(name);
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const auto& form : all_forms(alg, n, 1)) {
        const auto l = left_adjoint(form), r = right_adjoint(form);
        // s_r = s_l^* ∘ e_V with e_V the identity.
        ASSERT_EQ(r, dual_map(alg, l));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const auto x = basis_vector(alg, n, i), y = basis_vector(alg, n, j);
            ASSERT_EQ(pair(alg, apply(alg, l, x), y), evaluate(form, 0, x, y));
            ASSERT_EQ(pair(alg, apply(alg, r, x), y), alg.conj(evaluate(form, 0, y, x)));
          }
        }
      }
    }
  }
}

TEST(Adjoints, Examples) {
  const auto f3 = prime_field_algebra(3);
  const auto sym = make_form(f3, int_matrix(f3, {{1, 2}, {2, 0}}));
  EXPECT_EQ(left_adjoint(sym), right_adjoint(sym));
  const auto s = make_form(f3, int_matrix(f3, {{0, 1}, {0, 0}}));
  EXPECT_EQ(right_adjoint(s), transpose(left_adjoint(s)));
  EXPECT_NE(right_adjoint(s), left_adjoint(s));
  const auto empty = zero_system(f3, 0, 1);
  EXPECT_EQ(left_adjoint(empty).rows(), 0u);
  EXPECT_EQ(right_adjoint(empty).cols(), 0u);
}

TEST(Hermitian, Examples) {
  const auto f3 = prime_field_algebra(3);
  EXPECT_TRUE(is_epsilon_hermitian(make_form(f3, int_matrix(f3, {{0, 1}, {1, 0}})), 1));
  const auto q = rational_algebra();
  EXPECT_TRUE(is_epsilon_hermitian(make_form(q, int_matrix(q, {{0, 1}, {-1, 0}})), -1));
  EXPECT_FALSE(is_epsilon_hermitian(make_form(q, int_matrix(q, {{0, 1}, {-1, 0}})), 1));
  const auto s = make_form(f3, int_matrix(f3, {{0, 1}, {0, 0}}));
  EXPECT_FALSE(is_epsilon_hermitian(s, 1));
  EXPECT_FALSE(is_epsilon_hermitian(s, -1));
  EXPECT_THROW(is_epsilon_hermitian(s, 2), InvalidInput);
}

TEST(Hermitian, MatchesPointwiseDefinition) {
  for (const char* name : {"gf3", "gf9-frobenius", "split-gf3"}) {
    SCOPED_TRACE(name);
    const auto alg = shipped_finite(name);
    for (std::size_t n = 1; n <= 2; ++n) {
      for (const auto& form : all_forms(alg, n, 1)) {
        for (int eps : {1, -1}) {
          bool pointwise = true;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              const auto x = basis_vector(alg, n, i), y = basis_vector(alg, n, j);
              pointwise &= alg.conj(evaluate(form, 0, x, y)) == alg.mul(alg.from_int(eps), evaluate(form, 0, y, x));
            }
          }
          ASSERT_EQ(is_epsilon_hermitian(form, eps), pointwise);
        }
      }
    }
  }
}

TEST(Unimodular, Examples) {
  const auto f3 = prime_field_algebra(3);
  EXPECT_TRUE(is_unimodular(make_form(f3, identity(f3, 3))));
  EXPECT_FALSE(is_unimodular(zero_system(f3, 2, 1)));
  EXPECT_FALSE(is_unimodular(make_form(f3, int_matrix(f3, {{1, 1}, {1, 1}}))));
  EXPECT_TRUE(is_unimodular(zero_system(f3, 0, 1)));
  const auto sys = make_system(f3, 1, {int_matrix(f3, {{1}}), int_matrix(f3, {{0}})});
  EXPECT_FALSE(is_unimodular(sys));
}

TEST(OrthogonalSum, Examples) {
  const auto f3 = prime_field_algebra(3);
  const auto a = make_form(f3, int_matrix(f3, {{1, 2}, {0, 1}}));
  EXPECT_EQ(orthogonal_sum(a, zero_system(f3, 0, 1)), a);
  EXPECT_EQ(orthogonal_sum(diagonal_form(f3, {1}), diagonal_form(f3, {2})), diagonal_form(f3, {1, 2}));
  EXPECT_THROW(orthogonal_sum(a, zero_system(f3, 1, 2)), DimensionMismatch);
  EXPECT_THROW(orthogonal_sum(a, diagonal_form(prime_field_algebra(5), {1})), InvalidInput);
}

TEST(OrthogonalSum, EvaluatesBlockwise) {
  const auto f3 = prime_field_algebra(3);
  for (const auto& a : all_forms(f3, 1, 1)) {
    for (const auto& b : all_forms(f3, 1, 1)) {
      const auto sum = orthogonal_sum(a, b);
      for (std::uint32_t x1 = 0; x1 < 3; ++x1)
        for (std::uint32_t x2 = 0; x2 < 3; ++x2)
          for (std::uint32_t y1 = 0; y1 < 3; ++y1)
            for (std::uint32_t y2 = 0; y2 < 3; ++y2) {
              ASSERT_EQ(evaluate(sum, 0, {x1, x2}, {y1, y2}),
                        f3.add(evaluate(a, 0, {x1}, {y1}), evaluate(b, 0, {x2}, {y2})));
            }
    }
  }
}

TEST(OrthogonalSum, CommutativeAndAssociativeWithPermutationWitnesses) {
  const auto alg = gf9_frobenius();
  const auto forms = all_forms(alg, 1, 1);
  const auto swap = int_matrix(alg, {{0, 1}, {1, 0}});
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const auto ab = orthogonal_sum(forms[i], forms[j]);
      const auto ba = orthogonal_sum(forms[j], forms[i]);
      ASSERT_TRUE(is_isometry(ab, ba, swap));
      const auto& c = forms[(i + j) % forms.size()];
      // (a⊕b)⊕c and a⊕(b⊕c) coincide as matrices; a⊕b⊕c vs c⊕a⊕b via a cyclic permutation.
      ASSERT_EQ(orthogonal_sum(ab, c), orthogonal_sum(forms[i], orthogonal_sum(forms[j], c)));
      const auto cycle = int_matrix(alg, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
      ASSERT_TRUE(is_isometry(orthogonal_sum(ab, c), orthogonal_sum(c, ab), cycle));
    }
  }
}

TEST(Transform, Examples) {
  const auto f3 = prime_field_algebra(3);
  const auto s = diagonal_form(f3, {1});
  EXPECT_EQ(transform(s, identity(f3, 1)), s);
  EXPECT_EQ(transform(s, int_matrix(f3, {{2}})), s);
  EXPECT_THROW(transform(s, int_matrix(f3, {{0}})), NotInvertible);
  EXPECT_THROW(transform(s, identity(f3, 2)), DimensionMismatch);
}

TEST(Transform, InverseRoundTripRandom) {
  const auto alg = shipped_finite("quaternions-gf3");
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, alg.size() - 1);
  int checked = 0;
  while (checked < 50) {
    auto p = zero_matrix(alg, 2, 2);
    for (auto& e : p.entries()) e = alg.element(pick(rng));
    const auto inv = mat_invert(alg, p);
    if (!inv) continue;
    auto g = zero_matrix(alg, 2, 2);
    for (auto& e : g.entries()) e = alg.element(pick(rng));
    const auto f = make_form(alg, g);
    EXPECT_EQ(transform(transform(f, p), *inv), f);
    ++checked;
  }
}

TEST(Transform, PreservesHermitianAndUnimodular) {
  const auto f3 = prime_field_algebra(3);
  const auto units = enumerate_units(f3, 2);
  for (const auto& f : all_forms(f3, 2, 1)) {
    for (const auto& p : units) {
      const auto t = transform(f, p);
      for (int eps : {1, -1}) ASSERT_EQ(is_epsilon_hermitian(t, eps), is_epsilon_hermitian(f, eps));
      ASSERT_EQ(is_unimodular(t), is_unimodular(f));
    }
  }
}

TEST(Isometry, Examples) {
  const auto f3 = prime_field_algebra(3);
  const auto a = make_form(f3, int_matrix(f3, {{1, 2}, {0, 2}}));
  EXPECT_EQ(is_isometric_bruteforce(a, a), identity(f3, 2));
  EXPECT_FALSE(is_isometric_bruteforce(diagonal_form(f3, {1}), diagonal_form(f3, {2})).has_value());
  const auto f5 = prime_field_algebra(5);
  const auto w = is_isometric_bruteforce(diagonal_form(f5, {1}), diagonal_form(f5, {4}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, int_matrix(f5, {{2}}));
  EXPECT_THROW(is_isometric_bruteforce(diagonal_form(rational_algebra(), {1}), diagonal_form(rational_algebra(), {2})),
               InfiniteBase);
}

TEST(Isometry, AgreesWithMatrixScan) {
  struct Case {
    const char* name;
    std::size_t rank, index_count;
  };
  for (const auto& c : {Case{"gf3", 2, 1}, Case{"gf3", 1, 2}, Case{"gf9-frobenius", 1, 2}, Case{"split-gf3", 1, 1}}) {
    SCOPED_TRACE(c.name);
    const auto alg = shipped_finite(c.name);
    const auto forms = all_forms(alg, c.rank, c.index_count);
    for (const auto& a : forms) {
      for (const auto& b : forms) {
        const auto w = is_isometric_bruteforce(a, b);
        ASSERT_EQ(w.has_value(), isometric_by_scan(a, b));
        if (w) {
          ASSERT_TRUE(is_isometry(a, b, *w));
        }
      }
    }
  }
}

TEST(Isometry, EquivalenceRelationWitnesses) {
  const auto f3 = prime_field_algebra(3);
  const auto forms = all_forms(f3, 2, 1);
  std::vector<std::vector<std::optional<MatrixOver<FiniteAlgebra>>>> w(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) w[i].push_back(is_isometric_bruteforce(forms[i], forms[j]));
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    ASSERT_TRUE(w[i][i].has_value());
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (!w[i][j]) continue;
      // symmetric: the inverse witness
      ASSERT_TRUE(is_isometry(forms[j], forms[i], *mat_invert(f3, *w[i][j])));
      for (std::size_t k = 0; k < forms.size(); ++k) {
        if (!w[j][k]) continue;
        // transitive: compose P_jk · P_ij
        ASSERT_TRUE(is_isometry(forms[i], forms[k], mat_mul(f3, *w[j][k], *w[i][j])));
      }
    }
  }
}

TEST(Isometry, RespectsBudget) {
  const auto alg = gf9_frobenius();
  Budget tiny(5);
  const auto plane = make_form(alg, int_matrix(alg, {{0, 1}, {1, 0}}));
  EXPECT_THROW(is_isometric_bruteforce(make_form(alg, identity(alg, 2)), plane, tiny), BudgetExceeded);
  EXPECT_TRUE(is_isometric_bruteforce(make_form(alg, identity(alg, 2)), plane).has_value());
}

TEST(Classify, Examples) {
  const auto f3 = prime_field_algebra(3);
  const auto all = classify_isometry_classes(f3, 1, 1);
  ASSERT_EQ(all.representatives.size(), 3u);
  EXPECT_EQ(all.representatives[0], diagonal_form(f3, {0}));
  EXPECT_EQ(all.representatives[1], diagonal_form(f3, {1}));
  EXPECT_EQ(all.representatives[2], diagonal_form(f3, {2}));
  const auto sym = classify_isometry_classes(f3, 1, 1, FormFilter{1, true});
  ASSERT_EQ(sym.representatives.size(), 2u);
  EXPECT_EQ(sym.representatives[0], diagonal_form(f3, {1}));
  EXPECT_EQ(sym.representatives[1], diagonal_form(f3, {2}));
  const auto empty = classify_isometry_classes(f3, 0, 1);
  ASSERT_EQ(empty.representatives.size(), 1u);
  EXPECT_EQ(empty.representatives[0].rank, 0u);
}

TEST(Classify, MatchesPairwiseOracleAndOrbitMinima) {
  struct Case {
    const char* name;
    std::size_t rank, index_count;
  };
  for (const auto& c : {Case{"gf3", 2, 1}, Case{"gf3", 1, 2}, Case{"gf9-frobenius", 1, 2}, Case{"gf3", 2, 2}}) {
    SCOPED_TRACE(c.name);
    const auto alg = shipped_finite(c.name);
    const auto cls = classify_isometry_classes(alg, c.rank, c.index_count);
    std::uint64_t covered = 0;
    for (auto s : cls.orbit_sizes) covered += s;
    EXPECT_EQ(covered, tuple_count(alg, c.rank, c.index_count));
    // Representatives are pairwise non-isometric.
    for (std::size_t i = 0; i < cls.representatives.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.representatives.size(); ++j) {
        ASSERT_FALSE(is_isometric_bruteforce(cls.representatives[i], cls.representatives[j]).has_value());
      }
    }
    // Every tuple is isometric to its representative, which has the least index.
    for (std::uint64_t idx = 0; idx < tuple_count(alg, c.rank, c.index_count); idx += 7) {
      const auto f = tuple_at(alg, c.rank, c.index_count, idx);
      const auto& rep = cls.representatives[cls.class_index(f)];
      ASSERT_LE(tuple_index(rep), idx);
      ASSERT_TRUE(is_isometric_bruteforce(f, rep).has_value());
      ASSERT_EQ(canonical_representative(f), rep);
    }
  }
}

TEST(Classify, BudgetEstimate) {
  Budget tiny(100);
  try {
    classify_isometry_classes(gf9_frobenius(), 2, 1, FormFilter{}, tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.estimate(), 6561u);
  }
}
