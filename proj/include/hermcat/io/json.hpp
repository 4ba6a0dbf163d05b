#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermcat/algebra/algebra_data.hpp"
#include "hermcat/algebra/coefficient_algebra.hpp"
#include "hermcat/algebra/finite_algebra.hpp"
#include "hermcat/algebra/finite_field.hpp"
#include "hermcat/algebra/matrix.hpp"
#include "hermcat/algebra/rational_field.hpp"
#include "hermcat/double_arrow/category.hpp"
#include "hermcat/extension/extension.hpp"
#include "hermcat/forms/system.hpp"
#include "hermcat/witt/hyperbolic.hpp"

namespace hermcat::io {

// nlohmann::json keeps object keys in a std::map, so dumps are sorted and stable.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class BaseKind { Finite, Rational };

Json read_json_file(const std::filesystem::path& path);
// Two-space indentation with a trailing newline.
std::string dump(const Json& doc);

// Base fields: {"kind":"finite","p","e","modulus"} with the modulus lowest
// degree first, or {"kind":"rational"} optionally with "radicand".
Json field_to_json(const algebra::FiniteField& f);
Json field_to_json(const algebra::RationalField& f);
BaseKind base_kind(const Json& base);
algebra::FiniteField finite_field_from_json(const Json& base);
algebra::RationalField rational_field_from_json(const Json& base);

// Prime-field scalars are integers, 𝔽_{pᵉ} scalars are coefficient lists
// (lowest degree first; a bare integer is read through ℤ → 𝔽). Rationals are
// strings "num/den"; elements a + b√d of ℚ(√d) are pairs of such strings.
Json scalar_to_json(const algebra::FiniteField& f, algebra::FiniteField::Elem x);
algebra::FiniteField::Elem scalar_from_json(const algebra::FiniteField& f, const Json& j);
Json scalar_to_json(const algebra::RationalField& f, const algebra::QuadNumber& x);
algebra::QuadNumber scalar_from_json(const algebra::RationalField& f, const Json& j);

inline algebra::FiniteField field_from_json(const Json& base, const algebra::FiniteField*) {
  return finite_field_from_json(base);
}
inline algebra::RationalField field_from_json(const Json& base, const algebra::RationalField*) {
  return rational_field_from_json(base);
}

template <class Field>
Json algebra_data_to_json(const algebra::AlgebraData<Field>& d) {
  const int m = d.dim;
  Json sc = Json::array();
  for (int i = 0; i < m; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m; ++j) {
      Json cell = Json::array();
      for (int k = 0; k < m; ++k) cell.push_back(scalar_to_json(d.field, d.c(i, j, k)));
      row.push_back(std::move(cell));
    }
    sc.push_back(std::move(row));
  }
  Json unit = Json::array();
  for (const auto& u : d.unit) unit.push_back(scalar_to_json(d.field, u));
  Json inv = Json::array();
  for (int i = 0; i < m; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m; ++j) row.push_back(scalar_to_json(d.field, d.sigma(i, j)));
    inv.push_back(std::move(row));
  }
  return Json{{"base", field_to_json(d.field)}, {"dim", m}, {"structure_constants", std::move(sc)},
              {"unit", std::move(unit)}, {"involution", std::move(inv)}};
}

namespace detail {

const Json& member(const Json& j, const char* key);
std::size_t size_member(const Json& j, const char* key);
void require_array(const Json& j, std::size_t size, const char* what);

}  // namespace detail

template <class Field>
algebra::AlgebraData<Field> algebra_data_from_json(const Json& j) {
  using detail::member;
  algebra::AlgebraData<Field> d{field_from_json(member(j, "base"), static_cast<const Field*>(nullptr)), 0, {}, {}, {}};
  const std::size_t m = detail::size_member(j, "dim");
  if (m == 0) throw InvalidInput("algebra dimension must be positive");
  d.dim = static_cast<int>(m);
  const auto& sc = member(j, "structure_constants");
  detail::require_array(sc, m, "structure_constants");
  for (const auto& row : sc) {
    detail::require_array(row, m, "structure_constants row");
    for (const auto& cell : row) {
      detail::require_array(cell, m, "structure_constants cell");
      for (const auto& c : cell) d.structure.push_back(scalar_from_json(d.field, c));
    }
  }
  const auto& unit = member(j, "unit");
  detail::require_array(unit, m, "unit");
  for (const auto& u : unit) d.unit.push_back(scalar_from_json(d.field, u));
  const auto& inv = member(j, "involution");
  detail::require_array(inv, m, "involution");
  for (const auto& row : inv) {
    detail::require_array(row, m, "involution row");
    for (const auto& c : row) d.involution.push_back(scalar_from_json(d.field, c));
  }
  d.check_shape();
  return d;
}

template <algebra::InvolutiveAlgebra A>
Json algebra_to_json(const A& alg) {
  return algebra_data_to_json(alg.data());
}

// Validates the axioms; an invalid algebra is an input error.
algebra::FiniteAlgebra finite_algebra_from_json(const Json& j);
algebra::RationalAlgebra rational_algebra_from_json(const Json& j);


template <algebra::InvolutiveAlgebra A>
Json element_to_json(const A& alg, const typename A::Element& x) {
  Json out = Json::array();
  for (const auto& c : alg.coefficients(x)) out.push_back(scalar_to_json(alg.field(), c));
  return out;
}

// Elements are coefficient lists; a bare scalar stands for its image in A.
template <algebra::InvolutiveAlgebra A>
typename A::Element element_from_json(const A& alg, const Json& j) {
  if (!j.is_array()) return alg.embed(scalar_from_json(alg.field(), j));
  const std::size_t d = static_cast<std::size_t>(alg.dim());
  detail::require_array(j, d, "algebra element");
  std::vector<typename A::Scalar> c;
  c.reserve(d);
  for (const auto& x : j) c.push_back(scalar_from_json(alg.field(), x));
  return alg.from_coefficients(c);
}

template <algebra::InvolutiveAlgebra A>
Json matrix_to_json(const A& alg, const algebra::MatrixOver<A>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(alg, m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// Rows and columns are checked against the expected shape; a matrix with zero
// rows is written as [] and carries no column count of its own.
template <algebra::InvolutiveAlgebra A>
algebra::MatrixOver<A> matrix_from_json(const A& alg, const Json& j, std::size_t rows, std::size_t cols) {
  detail::require_array(j, rows, "matrix");
  auto m = algebra::zero_matrix(alg, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    detail::require_array(j[r], cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element_from_json(alg, j[r][c]);
  }
  return m;
}

template <algebra::InvolutiveAlgebra A>
algebra::MatrixOver<A> square_matrix_from_json(const A& alg, const Json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  return matrix_from_json(alg, j, j.size(), j.size());
}

template <algebra::InvolutiveAlgebra A>
Json form_to_json(const forms::SesquilinearSystem<A>& s) {
  Json grams = Json::array();
  for (const auto& g : s.grams) grams.push_back(matrix_to_json(s.algebra, g));
  return Json{{"algebra", algebra_to_json(s.algebra)}, {"rank", s.rank}, {"grams", std::move(grams)}};
}

// The "algebra" member is ignored here: callers resolve it (see resolve_algebra).
template <algebra::InvolutiveAlgebra A>
forms::SesquilinearSystem<A> form_from_json(const A& alg, const Json& j) {
  const std::size_t rank = detail::size_member(j, "rank");
  const auto& grams = detail::member(j, "grams");
  if (!grams.is_array() || grams.empty()) throw InvalidInput("a form needs at least one Gram matrix");
  std::vector<algebra::MatrixOver<A>> out;
  for (const auto& g : grams) out.push_back(matrix_from_json(alg, g, rank, rank));
  return forms::make_system(alg, rank, std::move(out));
}

template <algebra::InvolutiveAlgebra A>
Json arrows_to_json(const A& alg, const std::vector<std::pair<algebra::MatrixOver<A>, algebra::MatrixOver<A>>>& arrows) {
  Json out = Json::array();
  for (const auto& [f, g] : arrows) out.push_back(Json::array({matrix_to_json(alg, f), matrix_to_json(alg, g)}));
  return out;
}

template <algebra::InvolutiveAlgebra A>
std::vector<std::pair<algebra::MatrixOver<A>, algebra::MatrixOver<A>>> arrows_from_json(const A& alg, const Json& j,
                                                                                       std::size_t m, std::size_t n) {
  if (!j.is_array() || j.empty()) throw InvalidInput("at least one pair of arrows is required");
  std::vector<std::pair<algebra::MatrixOver<A>, algebra::MatrixOver<A>>> out;
  for (const auto& pair : j) {
    detail::require_array(pair, 2, "arrow pair");
    out.emplace_back(matrix_from_json(alg, pair[0], n, m), matrix_from_json(alg, pair[1], n, m));
  }
  return out;
}

template <algebra::InvolutiveAlgebra A>
Json da_object_to_json(const double_arrow::DAObject<A>& q) {
  return Json{{"algebra", algebra_to_json(q.algebra)},
              {"m", q.m},
              {"n", q.n},
              {"arrows", arrows_to_json(q.algebra, q.arrows)}};
}

template <algebra::InvolutiveAlgebra A>
double_arrow::DAObject<A> da_object_from_json(const A& alg, const Json& j) {
  const std::size_t m = detail::size_member(j, "m"), n = detail::size_member(j, "n");
  return double_arrow::make_da_object(alg, m, n, arrows_from_json(alg, detail::member(j, "arrows"), m, n));
}

template <algebra::InvolutiveAlgebra A>
Json da_morphism_to_json(const A& alg, const double_arrow::DAMorphism<A>& f) {
  return Json{{"phi", matrix_to_json(alg, f.phi)}, {"psi", matrix_to_json(alg, f.psi)}};
}

template <algebra::InvolutiveAlgebra A>
double_arrow::DAMorphism<A> da_morphism_from_json(const A& alg, const Json& j, std::size_t m_target,
                                                   std::size_t m_source, std::size_t n_target, std::size_t n_source) {
  return {matrix_from_json(alg, detail::member(j, "phi"), m_target, m_source),
          matrix_from_json(alg, detail::member(j, "psi"), n_target, n_source)};
}

template <algebra::InvolutiveAlgebra A>
Json da_form_to_json(const double_arrow::HermitianDAForm<A>& h) {
  auto out = da_object_to_json(h.object);
  const auto& alg = h.object.algebra;
  out["xi"] = Json::array({matrix_to_json(alg, h.xi1), matrix_to_json(alg, h.xi2)});
  out["epsilon"] = h.epsilon;
  return out;
}

template <algebra::InvolutiveAlgebra A>
double_arrow::HermitianDAForm<A> da_form_from_json(const A& alg, const Json& j) {
  auto q = da_object_from_json(alg, j);
  const auto& xi = detail::member(j, "xi");
  detail::require_array(xi, 2, "xi");
  double_arrow::HermitianDAForm<A> h{q, matrix_from_json(alg, xi[0], q.n, q.m), matrix_from_json(alg, xi[1], q.m, q.n),
                                     j.contains("epsilon") ? j["epsilon"].get<int>() : 1};
  return h;
}

// Hyperbolic data share the DA-object layout.
template <algebra::InvolutiveAlgebra A>
Json spec_to_json(const witt::HyperbolicSpec<A>& spec) {
  return Json{{"algebra", algebra_to_json(spec.algebra)},
              {"m", spec.m},
              {"n", spec.n},
              {"arrows", arrows_to_json(spec.algebra, spec.arrows)}};
}

template <algebra::InvolutiveAlgebra A>
witt::HyperbolicSpec<A> spec_from_json(const A& alg, const Json& j) {
  const std::size_t m = detail::size_member(j, "m"), n = detail::size_member(j, "n");
  return witt::make_spec(alg, m, n, arrows_from_json(alg, detail::member(j, "arrows"), m, n));
}

// {base, degree, modulus}: base is the ground field, modulus the defining
// polynomial over it, lowest degree first.
Json extension_to_json(const extension::FiniteExtension& ext);
Json extension_to_json(const extension::RationalExtension& ext);
extension::FiniteExtension finite_extension_from_json(const Json& j);
extension::RationalExtension rational_extension_from_json(const Json& j);

// The "algebra" member of a document may be inline, a path (relative to
// `dir`), or the name of a shipped algebra.
Json resolve_algebra(const Json& doc, const std::filesystem::path& dir);

}  // namespace hermcat::io
