// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hermcat/algebra/enumerate.hpp"
#include "hermcat/algebra/shipped.hpp"
#include "hermcat/algebra/validate.hpp"
#include "hermcat/double_arrow/category.hpp"
#include "hermcat/extension/checks.hpp"
#include "hermcat/forms/classify.hpp"
#include "hermcat/forms/isometry.hpp"
#include "hermcat/transfer/transfer.hpp"
#include "hermcat/witt/hyperbolic.hpp"
#include "hermcat/witt/table.hpp"

using namespace hermcat;
using namespace hermcat::algebra;

namespace {

using Alg = FiniteAlgebra;
using Form = forms::SesquilinearSystem<Alg>;
using Vec = std::vector<Alg::Element>;
using DAForm = double_arrow::HermitianDAForm<Alg>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// ---- criterion 1 ------------------------------------------------------------

// Valid hermitian forms on (A^m, A^m, (F_i, G_i)): ξ₂ invertible, ξ₁ = ξ₂^†,
// and ξ a morphism into the dual, which forces G_i = ξ₂⁻¹ F_i^† ξ₁.
template <class Fn>
void for_each_square_da_form(const Alg& alg, std::size_t m, std::size_t index_count, Fn&& fn) {
  const auto units = enumerate_units(alg, m);
  const auto arrow_count = saturating_pow(alg.size(), m * m);
  const auto tuples = saturating_pow(arrow_count, index_count);
  for (const auto& xi2 : units) {
    const auto xi1 = conj_transpose(alg, xi2);
    const auto xi2_inv = mat_invert_or_throw(alg, xi2);
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::vector<std::pair<MatrixOver<Alg>, MatrixOver<Alg>>> arrows;
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < index_count; ++i) {
        auto f = matrix_from_index(alg, m, m, rest % arrow_count);
        rest /= arrow_count;
        auto g = mat_mul(alg, xi2_inv, mat_mul(alg, conj_transpose(alg, f), xi1));
        arrows.emplace_back(std::move(f), std::move(g));
      }
      fn(DAForm{double_arrow::make_da_object(alg, m, m, std::move(arrows)), xi1, xi2, 1});
    }
  }
}

// Every (ξ₁, ξ₂, arrows) on an object of ranks (m, n), filtered by the library's validity check.
std::uint64_t count_valid_bruteforce(const Alg& alg, std::size_t m, std::size_t n, std::size_t index_count) {
  const std::size_t entries = 2 * m * n * (1 + index_count);
  const auto total = saturating_pow(alg.size(), entries);
  std::uint64_t valid = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    auto next = [&](std::size_t r, std::size_t c) {
      const auto block = saturating_pow(alg.size(), r * c);
      auto mat = matrix_from_index(alg, r, c, rest % block);
      rest /= block;
      return mat;
    };
    auto xi1 = next(n, m);
    auto xi2 = next(m, n);
    std::vector<std::pair<MatrixOver<Alg>, MatrixOver<Alg>>> arrows;
    for (std::size_t i = 0; i < index_count; ++i) {
      auto f = next(n, m);
      auto g = next(n, m);
      arrows.emplace_back(std::move(f), std::move(g));
    }
    const DAForm h{double_arrow::make_da_object(alg, m, n, std::move(arrows)), xi1, xi2, 1};
    if (double_arrow::is_valid_da_form(h)) ++valid;
  }
  return valid;
}

Outcome equivalence_round_trip() {
  Outcome o;
  const auto f3 = prime_field_algebra(3);
  std::uint64_t systems = 0, da_forms = 0;
  for (std::size_t index_count : {1u, 2u}) {
    for (std::size_t r = 0; r <= 2; ++r) {
      const auto count = forms::tuple_count(f3, r, index_count);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto s = forms::tuple_at(f3, r, index_count, i);
        const auto fs = double_arrow::functor_F(s);
        o.require(double_arrow::is_valid_da_form(fs), "F(s) valid");
        o.require(double_arrow::functor_G(fs) == s, "G(F(s)) = s");
        ++systems;
      }
    }
    for (std::size_t m = 0; m <= 2; ++m) {
      std::uint64_t generated = 0;
      for_each_square_da_form(f3, m, index_count, [&](const DAForm& h) {
        o.require(double_arrow::is_valid_da_form(h), "generated form valid");
        const auto fg = double_arrow::functor_F(double_arrow::functor_G(h));
        const auto w = double_arrow::roundtrip_witness(h);
        o.require(double_arrow::is_da_isometry(h, fg, w), "F(G(h)) isometric to h via the witness");
        ++generated;
      });
      da_forms += generated;
      // The generator is complete: compare with a brute-force count where that is feasible.
      if (2 * m * m * (1 + index_count) <= 6) {
        o.require(count_valid_bruteforce(f3, m, m, index_count) == generated, "generator count");
      }
    }
    // Objects with m ≠ n carry no unimodular form.
    for (const auto& [m, n] : {std::pair<std::size_t, std::size_t>{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 2}, {2, 1}}) {
      if (2 * m * n * (1 + index_count) <= 12) {
        o.require(count_valid_bruteforce(f3, m, n, index_count) == 0, "no form on non-square objects");
      }
    }
  }
  o.detail << systems << " systems, " << da_forms << " DA-forms";
  return o;
}

// ---- criterion 2 ------------------------------------------------------------

Vec apply(const Alg& alg, const MatrixOver<Alg>& m, const Vec& x) {
  Vec r(m.rows(), alg.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] = alg.add(r[i], alg.mul(m(i, j), x[j]));
  }
  return r;
}

// A functional y ∈ (A^n)* stored as a column u acts by v ↦ u^† v.
Alg::Element act(const Alg& alg, const Vec& u, const Vec& v) {
  auto t = alg.zero();
  for (std::size_t k = 0; k < u.size(); ++k) t = alg.add(t, alg.mul(alg.conj(u[k]), v[k]));
  return t;
}

// y₁(g(x₂)) + σ(y₂(f(x₁))) for x = (x₁, y₁), y = (x₂, y₂) in M ⊕ N*.
Alg::Element formula(const witt::HyperbolicSpec<Alg>& spec, const Vec& x, const Vec& y) {
  const auto& alg = spec.algebra;
  const Vec x1(x.begin(), x.begin() + spec.m), y1(x.begin() + spec.m, x.end());
  const Vec x2(y.begin(), y.begin() + spec.m), y2(y.begin() + spec.m, y.end());
  const auto& [f, g] = spec.arrows.front();
  return alg.add(act(alg, y1, apply(alg, g, x2)), alg.conj(act(alg, y2, apply(alg, f, x1))));
}

Outcome hyperbolic_formula() {
  Outcome o;
  std::uint64_t specs = 0, pairs = 0;
  for (const auto& [name, bound] : {std::pair<const char*, std::size_t>{"gf3", 2}, {"gf9-frobenius", 1}}) {
    const auto alg = shipped_finite(name);
    for (std::size_t rank = 0; rank <= 2 * bound; ++rank) {
      witt::for_each_spec(alg, rank, 1, [&](const witt::HyperbolicSpec<Alg>& spec) {
        if (spec.m > bound || spec.n > bound) return true;
        const auto h = witt::hyperbolic_sesquilinear(spec);
        ++specs;
        // Basis pairs over the base field: a·e_k with a in the algebra basis.
        for (std::size_t k = 0; k < rank; ++k) {
          for (std::size_t l = 0; l < rank; ++l) {
            for (int a = 0; a < alg.dim(); ++a) {
              for (int b = 0; b < alg.dim(); ++b) {
                Vec x(rank, alg.zero()), y(rank, alg.zero());
                x[k] = alg.basis(a);
                y[l] = alg.basis(b);
                o.require(forms::evaluate(h, 0, x, y) == formula(spec, x, y), "formula");
                ++pairs;
              }
            }
          }
        }
        return true;
      });
    }
  }
  o.detail << specs << " specs, " << pairs << " basis pairs";
  return o;
}

// ---- criterion 3 ------------------------------------------------------------

Outcome hyperbolic_plane() {
  Outcome o;
  const auto f3 = prime_field_algebra(3);
  const auto standard = witt::hyperbolic_hermitian_standard(f3, 1, 1);
  std::uint64_t specs = 0, witnesses = 0;
  for (std::size_t index_count : {1u, 2u}) {
    witt::for_each_spec(f3, 2, index_count, [&](const witt::HyperbolicSpec<Alg>& spec) {
      if (spec.m != 1) return true;
      ++specs;
      const auto h = witt::hyperbolic_sesquilinear(spec);
      bool equal = true, invertible = true;
      for (const auto& [f, g] : spec.arrows) {
        equal = equal && f == g;
        invertible = invertible && !f3.is_zero(f(0, 0)) && !f3.is_zero(g(0, 0));
      }
      o.require(forms::is_epsilon_hermitian(h, 1) == equal, "(a) hermitian iff F = G");
      o.require(forms::is_unimodular(h) == invertible, "(b) unimodular iff invertible");
      if (index_count == 1 && equal && invertible) {
        const auto p = witt::standard_plane_witness(spec);
        o.require(forms::pullback(standard, p).grams == h.grams, "(c) witness");
        o.require(forms::transform(standard, p) == h, "(c) exact transform");
        ++witnesses;
      }
      return true;
    });
  }
  o.require(witnesses == 2, "two invertible f over F_3");
  o.detail << specs << " specs, " << witnesses << " witnesses";
  return o;
}

// ---- criterion 4 ------------------------------------------------------------

Outcome class_bijection() {
  Outcome o;
  for (const auto& [name, expected] :
       {std::pair<const char*, std::size_t>{"gf3", 2}, {"gf5", 2}, {"gf9-frobenius", 1}}) {
    const auto alg = shipped_finite(name);
    const auto v0 = forms::diagonal_form(alg, {1});
    const auto report = transfer::verify_class_bijection(v0);
    o.require(report.bijection(), std::string(name) + " bijection");
    o.require(report.isometry_classes == expected, std::string(name) + " isometry classes");
    o.require(report.h_classes == expected, std::string(name) + " H-classes");
    // Independent H count: σ-symmetric units of E modulo congruence, E = End(A) ≅ A here.
    const auto ring = transfer::endomorphism_ring(transfer::free_module_ambient(v0, 1));
    const auto e = ring.algebra;
    std::set<std::uint64_t> seen;
    std::size_t orbits = 0;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
      const auto f = e.element(i);
      if (!e.is_unit(f) || e.conj(f) != f || seen.count(i)) continue;
      ++orbits;
      for (std::uint64_t j = 0; j < e.size(); ++j) {
        const auto g = e.element(j);
        if (e.is_unit(g)) seen.insert(e.index(e.mul(e.conj(g), e.mul(f, g))));
      }
    }
    o.require(orbits == expected, std::string(name) + " orbit count");
    o.detail << name << ": " << report.isometry_classes << "=" << report.h_classes << " ";
  }
  return o;
}

// ---- criterion 5 ------------------------------------------------------------

Outcome cancellation() {
  Outcome o;
  std::uint64_t triples = 0, hypotheses = 0;
  for (const char* name : {"gf3", "gf9-frobenius"}) {
    for (std::size_t index_count : {1u, 2u}) {
      const auto sweep = witt::cancellation_sweep(shipped_finite(name), 1, index_count);
      o.require(sweep.counterexamples.empty(), std::string(name) + " counterexample");
      triples += sweep.triples;
      hypotheses += sweep.sums_isometric;
    }
  }
  o.require(hypotheses > 0, "hypothesis exercised");
  o.detail << triples << " triples, " << hypotheses << " with isometric sums";
  return o;
}

// ---- criterion 6 ------------------------------------------------------------

Outcome springer() {
  Outcome o;
  const auto f3 = prime_field_algebra(3);
  const auto cubic = extension::finite_extension(f3.field(), {2, 2, 0, 1});
  std::uint64_t pairs = 0;
  for (std::size_t index_count : {1u, 2u}) {
    const auto r = extension::springer_check(f3, cubic, 2, index_count);
    o.require(r.descent_holds(), "descent over F_27");
    pairs += r.pairs_tested;
  }
  const auto quadratic = extension::finite_extension(f3.field(), 2);
  const auto control = extension::springer_check(f3, quadratic, 1, 1);
  bool found = false;
  const auto f9 = extension::extend_algebra(f3, quadratic);
  for (const auto& c : control.collapses) {
    if (c.first == forms::diagonal_form(f3, {1}) && c.second == forms::diagonal_form(f3, {2})) {
      found = forms::is_isometry(extension::extend_form(c.first, f9, quadratic),
                                 extension::extend_form(c.second, f9, quadratic), c.witness);
    }
  }
  o.require(found, "control collapse of <1>, <2> over F_9");
  o.detail << pairs << " pairs over F_27, " << control.collapses.size() << " control collapses";
  return o;
}

// ---- criterion 7 ------------------------------------------------------------

Outcome restriction() {
  Outcome o;
  const auto f3 = prime_field_algebra(3);
  const auto cubic = extension::finite_extension(f3.field(), {2, 2, 0, 1});
  const auto r = extension::restriction_map_check(f3, cubic, 2, 1);
  o.require(r.injectivity_violations.empty(), "injectivity");
  o.require(r.embedding_is_isomorphism, "End(M) extends to End(M_L)");
  o.require(r.square_failures.empty(), "commuting square");
  o.require(r.square_instances > 0 && r.hyperbolic_after > 0, "non-vacuous");
  o.detail << r.forms_checked << " forms, " << r.hyperbolic_after << " hyperbolic after extension, "
           << r.square_instances << " square instances";
  return o;
}

// ---- criterion 8 ------------------------------------------------------------

Outcome axioms() {
  Outcome o;
  std::size_t algebras = 0;
  for (const auto& entry : shipped_algebra_names()) {
    if (is_rational_shipped(entry.name)) {
      o.require(validate_algebra(shipped_rational(entry.name).data()).ok(), entry.name);
      ++algebras;
      continue;
    }
    const auto a = shipped_finite(entry.name);
    o.require(validate_algebra(a.data()).ok(), entry.name);
    ++algebras;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
      const auto x = a.element(i);
      o.require(a.conj(a.conj(x)) == x, entry.name + " sigma^2");
      for (std::uint64_t j = 0; j < a.size(); ++j) {
        const auto y = a.element(j);
        o.require(a.conj(a.mul(x, y)) == a.mul(a.conj(y), a.conj(x)), entry.name + " anti-multiplicative");
        o.require(a.conj(a.add(x, y)) == a.add(a.conj(x), a.conj(y)), entry.name + " additive");
      }
    }
  }
  std::uint64_t forms_checked = 0, objects = 0;
  for (const char* name : {"gf3", "gf9-frobenius"}) {
    const auto a = shipped_finite(name);
    const std::size_t max_rank = a.size() <= 3 ? 2 : 1;
    for (std::size_t r = 0; r <= max_rank; ++r) {
      const auto count = forms::tuple_count(a, r, 1);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto s = forms::tuple_at(a, r, 1, i);
        // s_r = s_l^* ∘ e_V, with e_V the identity in coordinates.
        o.require(forms::right_adjoint(s) == forms::dual_map(a, forms::left_adjoint(s)), "s_r = s_l^* e_V");
        ++forms_checked;
      }
    }
    for (std::size_t m = 0; m <= 1; ++m) {
      for (std::size_t n = 0; n <= 1; ++n) {
        const auto arrows = saturating_pow(a.size(), 2 * m * n);
        for (std::uint64_t t = 0; t < arrows; ++t) {
          const auto pair = matrix_from_index(a, 2 * n, m, t);
          MatrixOver<Alg> f = zero_matrix(a, n, m), g = zero_matrix(a, n, m);
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
              f(r, c) = pair(r, c);
              g(r, c) = pair(n + r, c);
            }
          }
          const auto q = double_arrow::make_da_object(a, m, n, {{f, g}});
          const auto qdd = double_arrow::dual_object(double_arrow::dual_object(q));
          o.require(qdd == q, "double dual");
          const auto e_q = double_arrow::double_dual_unit(q);
          o.require(double_arrow::is_da_morphism(q, qdd, e_q.phi, e_q.psi), "E is a morphism");
          // E*_C ∘ E_{C*} = id on C*.
          const auto lhs = double_arrow::compose(a, double_arrow::dual_morphism(a, e_q),
                                                 double_arrow::double_dual_unit(double_arrow::dual_object(q)));
          o.require(lhs == double_arrow::identity_morphism(double_arrow::dual_object(q)), "E*E = id");
          o.require(double_arrow::duality_axiom_holds(q), "duality axiom");
          ++objects;
        }
      }
    }
  }
  o.detail << algebras << " algebras, " << forms_checked << " forms, " << objects << " objects";
  return o;
}

// ---- criterion 9 ------------------------------------------------------------

Outcome witt_tables() {
  Outcome o;
  struct Case {
    const char* name;
    int epsilon;
    std::size_t expected;
  };
  for (const auto& c : {Case{"gf3", 1, 4}, Case{"gf9-frobenius", 1, 2}}) {
    const auto alg = shipped_finite(c.name);
    const auto table = witt::build_witt_table(alg, 2, 1, forms::FormFilter{c.epsilon, true});
    o.require(table.witt_class_count == c.expected, std::string(c.name) + " class count");
    int zero_class = -1;
    for (const auto& e : table.classes) {
      if (e.representative.rank == 0) zero_class = e.witt_class;
    }
    for (const auto& e : table.classes) {
      const bool hyperbolic = witt::is_hyperbolic_bruteforce(e.representative, Budget::kUnlimited).has_value();
      o.require(hyperbolic == e.is_hyperbolic, std::string(c.name) + " hyperbolicity flag");
      // Over a field, a form in the zero class of even rank ≤ 2 is hyperbolic.
      o.require(hyperbolic == (e.witt_class == zero_class), std::string(c.name) + " zero class = hyperbolic");
    }
    o.detail << c.name << ": " << table.witt_class_count << " classes ";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"equivalence round trip", equivalence_round_trip},
      {"hyperbolic form formula", hyperbolic_formula},
      {"hyperbolic plane (a)(b)(c)", hyperbolic_plane},
      {"isometry classes vs H-classes", class_bijection},
      {"cancellation", cancellation},
      {"odd-degree descent", springer},
      {"Witt injectivity and transfer square", restriction},
      {"axiom suites", axioms},
      {"Witt table sanity", witt_tables},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
