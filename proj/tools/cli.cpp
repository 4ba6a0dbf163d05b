#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <type_traits>

#include "hermcat/algebra/shipped.hpp"
#include "hermcat/algebra/validate.hpp"
#include "hermcat/double_arrow/category.hpp"
#include "hermcat/extension/checks.hpp"
#include "hermcat/extension/extension.hpp"
#include "hermcat/forms/classify.hpp"
#include "hermcat/forms/isometry.hpp"
#include "hermcat/io/json.hpp"
#include "hermcat/transfer/transfer.hpp"
#include "hermcat/witt/hyperbolic.hpp"
#include "hermcat/witt/table.hpp"

namespace hermcat::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string out_path;
  Budget* budget = nullptr;
  unsigned threads = 1;
};

int emit(Context& ctx, const std::string& verb, Json body, int code) {
  body["schema_version"] = io::kSchemaVersion;
  body["verb"] = verb;
  const auto text = io::dump(body);
  if (ctx.out_path.empty()) {
    ctx.out << text;
  } else {
    std::ofstream f(ctx.out_path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + ctx.out_path);
    f << text;
  }
  return code;
}

// ---- loading -------------------------------------------------------------

struct Doc {
  Json json;
  Json algebra;  // resolved algebra document, null if the file is an algebra itself
};

bool is_shipped_name(const std::string& s) {
  for (const auto& e : algebra::shipped_algebra_names()) {
    if (e.name == s) return true;
  }
  return false;
}

Json shipped_json(const std::string& name) {
  if (algebra::is_rational_shipped(name)) return io::algebra_to_json(algebra::shipped_rational(name));
  return io::algebra_to_json(algebra::shipped_finite(name));
}

Doc load_doc(const std::string& path) {
  Doc d{io::read_json_file(path), nullptr};
  if (d.json.is_object() && d.json.contains("algebra")) d.algebra = io::resolve_algebra(d.json, fs::path(path).parent_path());
  return d;
}

bool is_algebra_doc(const Json& j) { return j.is_object() && j.contains("structure_constants"); }

// An algebra argument: a shipped name, an algebra file, or any file whose
// "algebra" member resolves to one.
Json algebra_arg(const std::string& arg) {
  if (is_shipped_name(arg)) return shipped_json(arg);
  auto d = load_doc(arg);
  if (is_algebra_doc(d.json)) return d.json;
  if (!d.algebra.is_null()) return d.algebra;
  throw InvalidInput(arg + " is neither an algebra nor a document with an algebra");
}

template <class Fn>
int with_algebra(const Json& alg_json, Fn&& fn) {
  if (io::base_kind(io::detail::member(alg_json, "base")) == io::BaseKind::Finite) {
    return fn(io::finite_algebra_from_json(alg_json));
  }
  return fn(io::rational_algebra_from_json(alg_json));
}

const Json& algebra_of(const Doc& d, const std::string& path) {
  if (d.algebra.is_null()) throw InvalidInput(path + " has no 'algebra' member");
  return d.algebra;
}

void require_same_algebra(const Doc& a, const Doc& b) {
  if (a.algebra != b.algebra) throw InvalidInput("inputs are over different algebras");
}

bool is_da_form_doc(const Json& j) { return j.is_object() && j.contains("xi"); }

template <class A>
constexpr bool finite_v = A::is_finite;

[[noreturn]] void infinite(const char* what) {
  throw InfiniteBase(std::string(what) + " needs a finite base field");
}

// ---- serialization helpers ------------------------------------------------

template <class A>
Json grams_json(const forms::SesquilinearSystem<A>& s) {
  Json grams = Json::array();
  for (const auto& g : s.grams) grams.push_back(io::matrix_to_json(s.algebra, g));
  return Json{{"rank", s.rank}, {"grams", std::move(grams)}};
}

template <class A>
Json ambient_json(const transfer::Ambient<A>& amb) {
  const bool free = amb.kind == transfer::Ambient<A>::Kind::FreeModule;
  Json out{{"kind", free ? "free_module" : "double_arrow"},
           {"epsilon0", amb.epsilon0},
           {"h0", io::da_morphism_to_json(amb.algebra, amb.h0)}};
  if (free) {
    out["rank"] = amb.object.m;
  } else {
    out["object"] = io::da_object_to_json(amb.object);
    out["object"].erase("algebra");
  }
  return out;
}

template <class A>
Json ring_json(const transfer::EndomorphismRing<A>& ring) {
  Json basis = Json::array();
  for (const auto& b : ring.basis) basis.push_back(io::da_morphism_to_json(ring.ambient.algebra, b));
  return Json{{"dimension", ring.dim()},
              {"algebra", io::algebra_data_to_json(ring.data)},
              {"basis", std::move(basis)},
              {"ambient", ambient_json(ring.ambient)}};
}

// ---- extension descriptors -----------------------------------------------

template <class A>
extension::FieldExtension<typename A::Field> load_extension(const A& alg, const std::string& file, int degree) {
  using Field = typename A::Field;
  if (!file.empty()) {
    const auto j = io::read_json_file(file);
    extension::FieldExtension<Field> ext = [&] {
      if constexpr (std::is_same_v<Field, algebra::FiniteField>) {
        return io::finite_extension_from_json(j);
      } else {
        return io::rational_extension_from_json(j);
      }
    }();
    if (!(ext.base == alg.field())) throw InvalidInput("the extension is over a different base field");
    if (degree > 0 && degree != ext.degree) throw InvalidInput("--degree disagrees with the extension file");
    return ext;
  }
  if (degree < 1) throw InvalidInput("give --degree or --extension");
  if constexpr (std::is_same_v<Field, algebra::FiniteField>) {
    return extension::finite_extension(alg.field(), degree);
  } else {
    if (degree != 1) throw InvalidInput("extensions of Q need an --extension file with a modulus");
    return extension::rational_extension(alg.field(), {algebra::Rational(0), algebra::Rational(1)});
  }
}

// ---- verbs -----------------------------------------------------------------

int validate_algebra_verb(Context& ctx, const std::string& arg) {
  const Json j = algebra_arg(arg);
  auto run = [&](const auto& data) {
    const auto report = algebra::validate_algebra(data);
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back(
          Json{{"axiom", algebra::axiom_name(v.kind)}, {"basis_indices", v.basis_indices}, {"message", v.message}});
    }
    return emit(ctx, "validate-algebra",
                Json{{"valid", report.ok()},
                     {"dim", data.dim},
                     {"base", io::field_to_json(data.field)},
                     {"violations", std::move(violations)}},
                report.ok() ? kOk : kViolated);
  };
  if (io::base_kind(io::detail::member(j, "base")) == io::BaseKind::Finite) {
    return run(io::algebra_data_from_json<algebra::FiniteField>(j));
  }
  return run(io::algebra_data_from_json<algebra::RationalField>(j));
}

int adjoints_verb(Context& ctx, const std::string& path) {
  const auto d = load_doc(path);
  return with_algebra(algebra_of(d, path), [&](const auto& alg) {
    const auto s = io::form_from_json(alg, d.json);
    Json list = Json::array();
    for (std::size_t i = 0; i < s.index_count(); ++i) {
      list.push_back(Json{{"index", i},
                          {"left", io::matrix_to_json(alg, forms::left_adjoint(s, i))},
                          {"right", io::matrix_to_json(alg, forms::right_adjoint(s, i))}});
    }
    return emit(ctx, "adjoints", Json{{"adjoints", std::move(list)}}, kOk);
  });
}

int hermitian_check_verb(Context& ctx, const std::string& path, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("--epsilon must be 1 or -1");
  const auto d = load_doc(path);
  return with_algebra(algebra_of(d, path), [&](const auto& alg) {
    const auto s = io::form_from_json(alg, d.json);
    const bool herm = forms::is_epsilon_hermitian(s, epsilon);
    return emit(ctx, "hermitian-check",
                Json{{"epsilon", epsilon}, {"hermitian", herm}, {"unimodular", forms::is_unimodular(s)}},
                herm ? kOk : kViolated);
  });
}

int sum_verb(Context& ctx, const std::string& p1, const std::string& p2) {
  const auto a = load_doc(p1), b = load_doc(p2);
  require_same_algebra(a, b);
  return with_algebra(algebra_of(a, p1), [&](const auto& alg) {
    const auto s = forms::orthogonal_sum(io::form_from_json(alg, a.json), io::form_from_json(alg, b.json));
    return emit(ctx, "sum", Json{{"form", io::form_to_json(s)}}, kOk);
  });
}

int transform_verb(Context& ctx, const std::string& form_path, const std::string& matrix_path) {
  const auto d = load_doc(form_path);
  const auto m = io::read_json_file(matrix_path);
  return with_algebra(algebra_of(d, form_path), [&](const auto& alg) {
    const auto s = io::form_from_json(alg, d.json);
    const auto p = io::matrix_from_json(alg, io::detail::member(m, "matrix"), s.rank, s.rank);
    return emit(ctx, "transform", Json{{"form", io::form_to_json(forms::transform(s, p))}}, kOk);
  });
}

int isometric_verb(Context& ctx, const std::string& p1, const std::string& p2) {
  const auto a = load_doc(p1), b = load_doc(p2);
  require_same_algebra(a, b);
  return with_algebra(algebra_of(a, p1), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("isometry search");
    } else {
      const auto s = io::form_from_json(alg, a.json), t = io::form_from_json(alg, b.json);
      // P with P^† t P = s: an isometry from the first form to the second.
      const auto w = forms::is_isometric_bruteforce(s, t, *ctx.budget);
      Json body{{"isometric", w.has_value()}, {"verdict", w ? "isometric" : "not isometric"}};
      body["witness"] = w ? io::matrix_to_json(alg, *w) : Json(nullptr);
      return emit(ctx, "isometric", std::move(body), kOk);
    }
  });
}

int hyperbolic_verb(Context& ctx, const std::string& spec_path, const std::string& standard, std::size_t rank,
                    int epsilon) {
  if (spec_path.empty() == standard.empty()) throw InvalidInput("give exactly one of --spec and --standard");
  if (!standard.empty()) {
    if (epsilon != 1 && epsilon != -1) throw InvalidInput("--epsilon must be 1 or -1");
    return with_algebra(algebra_arg(standard), [&](const auto& alg) {
      const auto s = witt::hyperbolic_hermitian_standard(alg, rank, epsilon);
      return emit(ctx, "hyperbolic", Json{{"form", io::form_to_json(s)}}, kOk);
    });
  }
  const auto d = load_doc(spec_path);
  return with_algebra(algebra_of(d, spec_path), [&](const auto& alg) {
    const auto spec = io::spec_from_json(alg, d.json);
    const auto s = witt::hyperbolic_sesquilinear(spec);
    Json body{{"form", io::form_to_json(s)},
              {"hermitian", witt::hermitian_iff_equal_arrows(spec) && forms::is_epsilon_hermitian(s, 1)},
              {"unimodular", forms::is_unimodular(s)}};
    const bool plane = spec.m == spec.n && spec.arrows.size() == 1 && spec.arrows[0].first == spec.arrows[0].second &&
                       algebra::is_invertible_fast(alg, spec.arrows[0].first);
    if (plane) {
      const auto p = witt::standard_plane_witness(spec);
      const auto std_form = witt::hyperbolic_hermitian_standard(alg, spec.m, 1);
      body["standard_witness"] = io::matrix_to_json(alg, p);
      body["standard_witness_verified"] = forms::is_isometry(s, std_form, p);
    }
    return emit(ctx, "hyperbolic", std::move(body), kOk);
  });
}

int is_hyperbolic_verb(Context& ctx, const std::string& path, std::uint64_t bound) {
  const auto d = load_doc(path);
  return with_algebra(algebra_of(d, path), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("hyperbolicity search");
    } else {
      const auto s = io::form_from_json(alg, d.json);
      const auto w = witt::is_hyperbolic_bruteforce(s, bound, *ctx.budget);
      Json body{{"hyperbolic", w.has_value()}, {"spec_bound", bound}};
      if (w) {
        body["spec"] = io::spec_to_json(w->spec);
        body["spec"].erase("algebra");
        body["isometry"] = io::matrix_to_json(alg, w->isometry);
      }
      return emit(ctx, "is-hyperbolic", std::move(body), kOk);
    }
  });
}

int witt_table_verb(Context& ctx, const std::string& arg, std::size_t rank_bound, int epsilon,
                    std::size_t index_count, bool all_forms) {
  return with_algebra(algebra_arg(arg), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("Witt tables");
    } else {
      forms::FormFilter filter;
      if (epsilon != 0) filter.epsilon = epsilon;
      filter.unimodular = !all_forms;
      const auto table = witt::build_witt_table(alg, rank_bound, index_count, filter, *ctx.budget);
      std::vector<std::size_t> order(table.classes.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto& a = table.classes[x].representative;
        const auto& b = table.classes[y].representative;
        if (a.rank != b.rank) return a.rank < b.rank;
        return forms::tuple_index(a) < forms::tuple_index(b);
      });
      Json classes = Json::array();
      for (auto i : order) {
        const auto& e = table.classes[i];
        auto entry = grams_json(e.representative);
        entry["hyperbolic"] = e.is_hyperbolic;
        entry["witt_class"] = e.witt_class;
        classes.push_back(std::move(entry));
      }
      Json law = Json::array();
      for (const auto& [k, v] : table.sum_law) law.push_back(Json::array({k.first, k.second, v}));
      Json f = Json::object();
      if (filter.epsilon) f["epsilon"] = *filter.epsilon;
      f["unimodular"] = filter.unimodular;
      return emit(ctx, "witt-table",
                  Json{{"algebra", io::algebra_to_json(alg)},
                       {"rank_bound", rank_bound},
                       {"index_count", index_count},
                       {"filter", std::move(f)},
                       {"classes", std::move(classes)},
                       {"witt_class_count", table.witt_class_count},
                       {"sum_law", std::move(law)}},
                  kOk);
    }
  });
}

int f_functor_verb(Context& ctx, const std::string& path) {
  const auto d = load_doc(path);
  return with_algebra(algebra_of(d, path), [&](const auto& alg) {
    const auto h = double_arrow::functor_F(io::form_from_json(alg, d.json));
    return emit(ctx, "f-functor", Json{{"da_form", io::da_form_to_json(h)}}, kOk);
  });
}

int g_functor_verb(Context& ctx, const std::string& path) {
  const auto d = load_doc(path);
  return with_algebra(algebra_of(d, path), [&](const auto& alg) {
    const auto h = io::da_form_from_json(alg, d.json);
    const auto problems = double_arrow::da_form_violations(h);
    if (!problems.empty()) throw InvalidInput("not a unimodular hermitian DA-form: " + problems.front());
    return emit(ctx, "g-functor", Json{{"form", io::form_to_json(double_arrow::functor_G(h))}}, kOk);
  });
}

int roundtrip_verb(Context& ctx, const std::string& path, std::size_t rank_bound, std::size_t index_count) {
  const bool shipped = is_shipped_name(path);
  const Doc d = shipped ? Doc{shipped_json(path), nullptr} : load_doc(path);
  if (shipped || is_algebra_doc(d.json)) {
    return with_algebra(d.json, [&](const auto& alg) -> int {
      using A = std::decay_t<decltype(alg)>;
      if constexpr (!finite_v<A>) {
        infinite("exhaustive round trips");
      } else {
        std::uint64_t checked = 0;
        Json failures = Json::array();
        for (std::size_t r = 0; r <= rank_bound; ++r) {
          const auto count = forms::tuple_count(alg, r, index_count);
          ctx.budget->require(count, "round-trip sweep");
          for (std::uint64_t i = 0; i < count; ++i) {
            const auto s = forms::tuple_at(alg, r, index_count, i);
            ++checked;
            if (!(double_arrow::functor_G(double_arrow::functor_F(s)) == s)) failures.push_back(grams_json(s));
          }
          ctx.budget->charge(count, "round-trip sweep");
        }
        const bool ok = failures.empty();
        return emit(ctx, "roundtrip-check",
                    Json{{"mode", "sweep"},
                         {"rank_bound", rank_bound},
                         {"index_count", index_count},
                         {"forms_checked", checked},
                         {"holds", ok},
                         {"failures", std::move(failures)}},
                    ok ? kOk : kViolated);
      }
    });
  }
  return with_algebra(algebra_of(d, path), [&](const auto& alg) {
    if (is_da_form_doc(d.json)) {
      const auto h = io::da_form_from_json(alg, d.json);
      const auto problems = double_arrow::da_form_violations(h);
      if (!problems.empty()) throw InvalidInput("not a unimodular hermitian DA-form: " + problems.front());
      const auto fg = double_arrow::functor_F(double_arrow::functor_G(h));
      const auto w = double_arrow::roundtrip_witness(h);
      // w: h → F(G(h)), so h = w* F(G(h)) w.
      const bool ok = double_arrow::is_da_isometry(h, fg, w);
      return emit(ctx, "roundtrip-check",
                  Json{{"mode", "da_form"},
                       {"holds", ok},
                       {"image", io::da_form_to_json(fg)},
                       {"witness", io::da_morphism_to_json(alg, w)}},
                  ok ? kOk : kViolated);
    }
    const auto s = io::form_from_json(alg, d.json);
    const auto back = double_arrow::functor_G(double_arrow::functor_F(s));
    const bool ok = back == s;
    return emit(ctx, "roundtrip-check",
                Json{{"mode", "form"}, {"holds", ok}, {"image", io::form_to_json(back)}}, ok ? kOk : kViolated);
  });
}

// Ambient from a form file (free module) or a DA-form file.
template <class A>
transfer::Ambient<A> load_ambient(const A& alg, const Doc& d, int epsilon0) {
  if (is_da_form_doc(d.json)) return transfer::double_arrow_ambient(io::da_form_from_json(alg, d.json));
  const auto s0 = io::form_from_json(alg, d.json);
  if (epsilon0 == 0) epsilon0 = forms::is_epsilon_hermitian(s0, 1) ? 1 : -1;
  return transfer::free_module_ambient(s0, epsilon0);
}

int transfer_verb(Context& ctx, const std::string& ambient_path, const std::string& form_path, int epsilon0) {
  const auto amb_doc = load_doc(ambient_path);
  const auto form_doc = load_doc(form_path);
  require_same_algebra(amb_doc, form_doc);
  return with_algebra(algebra_of(amb_doc, ambient_path), [&](const auto& alg) {
    const auto ring = transfer::endomorphism_ring(load_ambient(alg, amb_doc, epsilon0));
    const auto t = is_da_form_doc(form_doc.json) ? transfer::transfer_form(ring, io::da_form_from_json(alg, form_doc.json))
                                                 : transfer::transfer_form(ring, io::form_from_json(alg, form_doc.json));
    Json body{{"ring", ring_json(ring)}, {"form", io::form_to_json(t)}};
    for (int e : {1, -1}) {
      if (forms::is_epsilon_hermitian(t, e)) {
        body["epsilon"] = e;
        break;
      }
    }
    return emit(ctx, "transfer", std::move(body), kOk);
  });
}

int enumerate_h_verb(Context& ctx, const std::string& ambient_path, int epsilon0) {
  const auto d = load_doc(ambient_path);
  return with_algebra(algebra_of(d, ambient_path), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("H enumeration");
    } else {
      const auto ring = transfer::endomorphism_ring(load_ambient(alg, d, epsilon0));
      const auto h = transfer::enumerate_H(ring.algebra, *ctx.budget);
      Json classes = Json::array();
      for (std::size_t i = 0; i < h.representatives.size(); ++i) {
        classes.push_back(Json{{"element", io::element_to_json(ring.algebra, h.representatives[i])},
                               {"morphism", io::da_morphism_to_json(alg, ring.from_element(h.representatives[i]))},
                               {"orbit_size", h.orbit_sizes[i]}});
      }
      return emit(ctx, "enumerate-h",
                  Json{{"ring", ring_json(ring)}, {"count", h.representatives.size()}, {"classes", std::move(classes)}},
                  kOk);
    }
  });
}

int bijection_verb(Context& ctx, const std::string& path) {
  const auto d = load_doc(path);
  return with_algebra(algebra_of(d, path), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("the class bijection check");
    } else {
      const auto r = transfer::verify_class_bijection(io::form_from_json(alg, d.json), *ctx.budget);
      Json mapping = Json::array();
      for (const auto& [rep, cls] : r.mapping) {
        auto entry = grams_json(rep);
        entry["h_class"] = cls;
        mapping.push_back(std::move(entry));
      }
      return emit(ctx, "verify-5-1-2",
                  Json{{"rank", r.rank},
                       {"index_count", r.index_count},
                       {"isometry_classes", r.isometry_classes},
                       {"h_classes", r.h_classes},
                       {"e_dimension", r.e_dimension},
                       {"well_defined", r.well_defined},
                       {"choice_independent", r.choice_independent},
                       {"injective", r.injective},
                       {"surjective", r.surjective},
                       {"bijection", r.bijection()},
                       {"mapping", std::move(mapping)}},
                  r.bijection() ? kOk : kViolated);
    }
  });
}

int extend_verb(Context& ctx, const std::string& path, const std::string& ext_file, int degree) {
  const bool shipped = is_shipped_name(path);
  const Doc d = shipped ? Doc{shipped_json(path), nullptr} : load_doc(path);
  const bool algebra_only = shipped || is_algebra_doc(d.json);
  return with_algebra(algebra_only ? d.json : algebra_of(d, path), [&](const auto& alg) {
    const auto ext = load_extension(alg, ext_file, degree);
    const auto alg_l = extension::extend_algebra(alg, ext);
    Json body{{"extension", io::extension_to_json(ext)}};
    if (algebra_only) {
      body["algebra"] = io::algebra_to_json(alg_l);
    } else {
      body["form"] = io::form_to_json(extension::extend_form(io::form_from_json(alg, d.json), alg_l, ext));
    }
    return emit(ctx, "extend", std::move(body), kOk);
  });
}

int springer_verb(Context& ctx, const std::string& arg, const std::string& ext_file, int degree,
                  std::size_t rank_bound, std::size_t index_count) {
  return with_algebra(algebra_arg(arg), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("the descent check");
    } else {
      const auto ext = load_extension(alg, ext_file, degree);
      const auto r = extension::springer_check(alg, ext, rank_bound, index_count, *ctx.budget, ctx.threads);
      const auto alg_l = extension::extend_algebra(alg, ext);
      Json collapses = Json::array();
      for (const auto& c : r.collapses) {
        collapses.push_back(Json{{"first", grams_json(c.first)},
                                 {"second", grams_json(c.second)},
                                 {"witness", io::matrix_to_json(alg_l, c.witness)}});
      }
      // Collapses contradict descent only for odd degree; for even degree they are the control.
      const bool violated = r.odd_degree() && !r.descent_holds();
      return emit(ctx, "springer-check",
                  Json{{"extension", io::extension_to_json(ext)},
                       {"degree", r.degree},
                       {"odd_degree", r.odd_degree()},
                       {"rank_bound", r.rank_bound},
                       {"index_count", r.index_count},
                       {"classes_per_rank", r.classes_per_rank},
                       {"pairs_tested", r.pairs_tested},
                       {"collapses", std::move(collapses)},
                       {"counterexamples", r.odd_degree() ? r.collapses.size() : 0},
                       {"descent_holds", r.descent_holds()}},
                  violated ? kViolated : kOk);
    }
  });
}

int restriction_verb(Context& ctx, const std::string& arg, const std::string& ext_file, int degree,
                     std::size_t rank_bound, int epsilon) {
  return with_algebra(algebra_arg(arg), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("the restriction check");
    } else {
      const auto ext = load_extension(alg, ext_file, degree);
      const auto r = extension::restriction_map_check(alg, ext, rank_bound, epsilon, *ctx.budget);
      Json violations = Json::array();
      for (const auto& v : r.injectivity_violations) violations.push_back(grams_json(v));
      Json failures = Json::array();
      for (const auto& f : r.square_failures) {
        failures.push_back(Json{{"h0", grams_json(f.h0)}, {"epsilon0", f.epsilon0}, {"form", grams_json(f.form)}});
      }
      return emit(ctx, "restriction-check",
                  Json{{"extension", io::extension_to_json(ext)},
                       {"degree", r.degree},
                       {"epsilon", r.epsilon},
                       {"rank_bound", r.rank_bound},
                       {"forms_checked", r.forms_checked},
                       {"hyperbolic_after_extension", r.hyperbolic_after},
                       {"injectivity_violations", std::move(violations)},
                       {"embedding_is_isomorphism", r.embedding_is_isomorphism},
                       {"square_instances", r.square_instances},
                       {"square_failures", std::move(failures)},
                       {"holds", r.holds()}},
                  r.holds() ? kOk : kViolated);
    }
  });
}

int cancellation_verb(Context& ctx, const std::vector<std::string>& paths, std::size_t summand_rank,
                      std::size_t index_count) {
  if (paths.size() == 1) {
    return with_algebra(algebra_arg(paths[0]), [&](const auto& alg) -> int {
      using A = std::decay_t<decltype(alg)>;
      if constexpr (!finite_v<A>) {
        infinite("cancellation sweeps");
      } else {
        const auto sweep = witt::cancellation_sweep(alg, summand_rank, index_count, *ctx.budget);
        Json cex = Json::array();
        for (const auto& [a, b, c] : sweep.counterexamples) {
          cex.push_back(Json{{"v1", grams_json(a)}, {"v2", grams_json(b)}, {"v", grams_json(c)}});
        }
        const bool ok = sweep.counterexamples.empty();
        return emit(ctx, "cancellation-check",
                    Json{{"mode", "sweep"},
                         {"summand_rank", summand_rank},
                         {"index_count", index_count},
                         {"triples", sweep.triples},
                         {"sums_isometric", sweep.sums_isometric},
                         {"counterexamples", std::move(cex)},
                         {"holds", ok}},
                    ok ? kOk : kViolated);
      }
    });
  }
  if (paths.size() != 3) throw InvalidInput("cancellation-check takes V' V'' V, or one algebra for a sweep");
  const auto a = load_doc(paths[0]), b = load_doc(paths[1]), c = load_doc(paths[2]);
  require_same_algebra(a, b);
  require_same_algebra(a, c);
  return with_algebra(algebra_of(a, paths[0]), [&](const auto& alg) -> int {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (!finite_v<A>) {
      infinite("cancellation checks");
    } else {
      const auto r = witt::cancellation_check(io::form_from_json(alg, a.json), io::form_from_json(alg, b.json),
                                              io::form_from_json(alg, c.json), *ctx.budget);
      Json body{{"mode", "triple"},
                {"sums_isometric", r.sums_isometric},
                {"summands_isometric", r.summands_isometric},
                {"holds", r.holds()}};
      body["sum_witness"] = r.sum_witness ? io::matrix_to_json(alg, *r.sum_witness) : Json(nullptr);
      body["summand_witness"] = r.summand_witness ? io::matrix_to_json(alg, *r.summand_witness) : Json(nullptr);
      return emit(ctx, "cancellation-check", std::move(body), r.holds() ? kOk : kViolated);
    }
  });
}

std::uint64_t default_budget() {
  const char* env = std::getenv("HERMCAT_BUDGET");
  if (env == nullptr || *env == '\0') return Budget::kDefaultLimit;
  const std::string text(env);
  if (text == "unlimited") return Budget::kUnlimited;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InvalidInput("HERMCAT_BUDGET must be a number");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with sesquilinear and hermitian forms over algebras with involution", "hermcat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--threads", threads, "worker threads for parallel searches")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget_flag, "operation budget (default 10^7 or $HERMCAT_BUDGET)");

  std::vector<std::string> inputs;
  int epsilon = 1;
  int epsilon0 = 0;
  int degree = 0;
  std::size_t rank = 1;
  std::size_t rank_bound = 2;
  std::size_t index_count = 1;
  std::size_t summand_rank = 1;
  std::uint64_t bound = 1000000;
  std::string spec_path, standard, ext_file;
  bool all_forms = false;
  std::function<int(Context&)> action;

  auto verb = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto one_input = [&](CLI::App* c, const char* what) { c->add_option("input", inputs, what)->required()->expected(1); };

  auto* c = verb("validate-algebra", "check the algebra-with-involution axioms");
  one_input(c, "algebra file or shipped name");
  c->callback([&] { action = [&](Context& x) { return validate_algebra_verb(x, inputs.at(0)); }; });

  c = verb("adjoints", "left and right adjoints of a form");
  one_input(c, "form file");
  c->callback([&] { action = [&](Context& x) { return adjoints_verb(x, inputs.at(0)); }; });

  c = verb("hermitian-check", "test whether a form is epsilon-hermitian");
  one_input(c, "form file");
  c->add_option("--epsilon", epsilon, "1 or -1");
  c->callback([&] { action = [&](Context& x) { return hermitian_check_verb(x, inputs.at(0), epsilon); }; });

  c = verb("sum", "orthogonal sum of two forms");
  c->add_option("inputs", inputs, "two form files")->required()->expected(2);
  c->callback([&] { action = [&](Context& x) { return sum_verb(x, inputs.at(0), inputs.at(1)); }; });

  c = verb("transform", "transport a form along an invertible matrix");
  c->add_option("inputs", inputs, "form file and matrix file")->required()->expected(2);
  c->callback([&] { action = [&](Context& x) { return transform_verb(x, inputs.at(0), inputs.at(1)); }; });

  c = verb("isometric", "search for an isometry between two forms");
  c->add_option("inputs", inputs, "two form files")->required()->expected(2);
  c->callback([&] { action = [&](Context& x) { return isometric_verb(x, inputs.at(0), inputs.at(1)); }; });

  c = verb("hyperbolic", "build a hyperbolic form");
  c->add_option("--spec", spec_path, "hyperbolic data file");
  c->add_option("--standard", standard, "algebra for the standard hermitian hyperbolic form");
  c->add_option("--rank", rank, "rank of each half of the standard form");
  c->add_option("--epsilon", epsilon, "1 or -1");
  c->callback([&] { action = [&](Context& x) { return hyperbolic_verb(x, spec_path, standard, rank, epsilon); }; });

  c = verb("is-hyperbolic", "search for hyperbolic data isometric to a form");
  one_input(c, "form file");
  c->add_option("--bound", bound, "maximum number of hyperbolic data to try");
  c->callback([&] { action = [&](Context& x) { return is_hyperbolic_verb(x, inputs.at(0), bound); }; });

  c = verb("witt-table", "classify forms up to Witt equivalence");
  one_input(c, "algebra file or shipped name");
  c->add_option("--rank-bound", rank_bound, "largest rank classified");
  c->add_option("--epsilon", epsilon, "1, -1, or 0 for no hermitian condition");
  c->add_option("--index-count", index_count, "number of Gram matrices per system");
  c->add_flag("--all-forms", all_forms, "do not restrict to unimodular forms");
  c->callback([&] {
    action = [&](Context& x) { return witt_table_verb(x, inputs.at(0), rank_bound, epsilon, index_count, all_forms); };
  });

  c = verb("f-functor", "sesquilinear system to hermitian double-arrow form");
  one_input(c, "form file");
  c->callback([&] { action = [&](Context& x) { return f_functor_verb(x, inputs.at(0)); }; });

  c = verb("g-functor", "hermitian double-arrow form to sesquilinear system");
  one_input(c, "double-arrow form file");
  c->callback([&] { action = [&](Context& x) { return g_functor_verb(x, inputs.at(0)); }; });

  c = verb("roundtrip-check", "check G(F(s)) = s, F(G(h)) isometric to h, or sweep an algebra");
  one_input(c, "form, double-arrow form, or algebra");
  c->add_option("--rank-bound", rank_bound, "sweep: largest rank");
  c->add_option("--index-count", index_count, "sweep: number of Gram matrices");
  c->callback([&] { action = [&](Context& x) { return roundtrip_verb(x, inputs.at(0), rank_bound, index_count); }; });

  c = verb("transfer", "transfer a form into the endomorphism ring of an ambient");
  c->add_option("inputs", inputs, "ambient form file and form file")->required()->expected(2);
  c->add_option("--epsilon0", epsilon0, "sign of a free-module ambient form (default: detected)");
  c->callback([&] { action = [&](Context& x) { return transfer_verb(x, inputs.at(0), inputs.at(1), epsilon0); }; });

  c = verb("enumerate-h", "symmetric units of the endomorphism ring up to congruence");
  one_input(c, "ambient form file");
  c->add_option("--epsilon0", epsilon0, "sign of a free-module ambient form (default: detected)");
  c->callback([&] { action = [&](Context& x) { return enumerate_h_verb(x, inputs.at(0), epsilon0); }; });

  c = verb("verify-5-1-2", "compare isometry classes over an object with H-classes");
  c->alias("verify-bijection");
  one_input(c, "base form file");
  c->callback([&] { action = [&](Context& x) { return bijection_verb(x, inputs.at(0)); }; });

  c = verb("extend", "extend scalars of an algebra or a form");
  one_input(c, "algebra, shipped name, or form file");
  c->add_option("--extension", ext_file, "extension descriptor file");
  c->add_option("--degree", degree, "degree of the extension (finite fields)");
  c->callback([&] { action = [&](Context& x) { return extend_verb(x, inputs.at(0), ext_file, degree); }; });

  c = verb("springer-check", "isometry descent along a field extension");
  one_input(c, "algebra file or shipped name");
  c->add_option("--extension", ext_file, "extension descriptor file");
  c->add_option("--degree", degree, "degree of the extension");
  c->add_option("--rank-bound", rank_bound, "largest rank classified");
  c->add_option("--index-count", index_count, "number of Gram matrices per system");
  c->callback([&] {
    action = [&](Context& x) { return springer_verb(x, inputs.at(0), ext_file, degree, rank_bound, index_count); };
  });

  c = verb("restriction-check", "Witt injectivity and transfer square along an odd-degree extension");
  one_input(c, "algebra file or shipped name");
  c->add_option("--extension", ext_file, "extension descriptor file");
  c->add_option("--degree", degree, "degree of the extension");
  c->add_option("--rank-bound", rank_bound, "largest rank for the injectivity check");
  c->add_option("--epsilon", epsilon, "1 or -1");
  c->callback([&] {
    action = [&](Context& x) { return restriction_verb(x, inputs.at(0), ext_file, degree, rank_bound, epsilon); };
  });

  c = verb("cancellation-check", "test V' + V = V'' + V => V' = V''");
  c->add_option("inputs", inputs, "V' V'' V form files, or one algebra for a sweep")->required()->expected(1, 3);
  c->add_option("--summand-rank", summand_rank, "sweep: largest summand rank");
  c->add_option("--index-count", index_count, "sweep: number of Gram matrices");
  c->callback([&] {
    action = [&](Context& x) { return cancellation_verb(x, inputs, summand_rank, index_count); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    Budget budget(budget_flag ? *budget_flag : default_budget());
    Context ctx{out, err, out_path, &budget, threads};
    return action(ctx);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const io::Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hermcat::cli
