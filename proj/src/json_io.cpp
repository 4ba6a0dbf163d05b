#include "hermcat/io/json.hpp"

#include <fstream>
#include <sstream>

#include "hermcat/algebra/rational.hpp"
#include "hermcat/algebra/shipped.hpp"
#include "hermcat/algebra/validate.hpp"

namespace hermcat::io {

using algebra::FiniteField;
using algebra::QuadNumber;
using algebra::Rational;
using algebra::RationalField;

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j[key];
}

std::size_t size_member(const Json& j, const char* key) {
  const auto& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidInput(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

void require_array(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  if (j.size() != size) {
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                            std::to_string(size));
  }
}

}  // namespace detail

namespace {

std::int64_t integer_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return algebra::parse_rational(j.get<std::string>());
  throw InvalidInput("rational scalars are integers or strings \"num/den\"");
}

}  // namespace

Json field_to_json(const FiniteField& f) {
  return Json{{"kind", "finite"}, {"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
}

Json field_to_json(const RationalField& f) {
  Json out{{"kind", "rational"}};
  if (f.is_quadratic()) out["radicand"] = f.radicand().str();
  return out;
}

BaseKind base_kind(const Json& base) {
  const auto& kind = detail::member(base, "kind");
  if (kind == "finite") return BaseKind::Finite;
  if (kind == "rational") return BaseKind::Rational;
  throw InvalidInput("base kind must be \"finite\" or \"rational\"");
}

FiniteField finite_field_from_json(const Json& base) {
  if (base_kind(base) != BaseKind::Finite) throw InvalidInput("expected a finite base field");
  const auto p = integer_of(detail::member(base, "p"), "p");
  if (p < 2 || p > 65521 || !algebra::is_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidInput("p must be a prime below 2^16");
  }
  const auto up = static_cast<std::uint32_t>(p);
  const std::int64_t e = base.contains("e") ? integer_of(base["e"], "e") : 1;
  if (e < 1) throw InvalidInput("e must be positive");
  if (!base.contains("modulus")) {
    if (e == 1) return FiniteField::prime(up);
    return FiniteField(up, algebra::first_irreducible(up, static_cast<int>(e)));
  }
  std::vector<std::uint32_t> modulus;
  for (const auto& c : base["modulus"]) {
    const auto v = integer_of(c, "modulus coefficient");
    modulus.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
  }
  if (static_cast<std::int64_t>(modulus.size()) != e + 1) throw InvalidInput("modulus degree must equal e");
  if (e == 1 && modulus == std::vector<std::uint32_t>{0, 1}) return FiniteField::prime(up);
  return FiniteField(up, std::move(modulus));
}

RationalField rational_field_from_json(const Json& base) {
  if (base_kind(base) != BaseKind::Rational) throw InvalidInput("expected a rational base field");
  if (!base.contains("radicand")) return RationalField::rationals();
  return RationalField::quadratic(rational_of(base["radicand"]));
}

Json scalar_to_json(const FiniteField& f, FiniteField::Elem x) {
  if (f.is_prime_field()) return x;
  auto d = f.digits(x);
  Json out = Json::array();
  for (auto c : d) out.push_back(c);
  return out;
}

FiniteField::Elem scalar_from_json(const FiniteField& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  detail::require_array(j, static_cast<std::size_t>(f.degree()), "field element");
  std::vector<std::uint32_t> d;
  const auto p = static_cast<std::int64_t>(f.characteristic());
  for (const auto& c : j) d.push_back(static_cast<std::uint32_t>(((integer_of(c, "field digit") % p) + p) % p));
  return f.from_digits(d);
}

Json scalar_to_json(const RationalField& f, const QuadNumber& x) {
  if (!f.is_quadratic()) return algebra::format_rational(x.a);
  return Json::array({algebra::format_rational(x.a), algebra::format_rational(x.b)});
}

QuadNumber scalar_from_json(const RationalField& f, const Json& j) {
  if (j.is_array()) {
    if (!f.is_quadratic()) throw InvalidInput("pairs are only meaningful over a quadratic field");
    detail::require_array(j, 2, "quadratic field element");
    return {rational_of(j[0]), rational_of(j[1])};
  }
  return {rational_of(j), 0};
}

namespace {

template <class Field>
void require_valid(const algebra::AlgebraData<Field>& d) {
  const auto report = algebra::validate_algebra(d);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvalidInput(std::string("algebra fails the ") + algebra::axiom_name(v.kind) + " axiom: " + v.message);
  }
}

}  // namespace

algebra::FiniteAlgebra finite_algebra_from_json(const Json& j) {
  auto d = algebra_data_from_json<FiniteField>(j);
  require_valid(d);
  return algebra::FiniteAlgebra(std::move(d));
}

algebra::RationalAlgebra rational_algebra_from_json(const Json& j) {
  auto d = algebra_data_from_json<RationalField>(j);
  require_valid(d);
  return algebra::RationalAlgebra(std::move(d));
}

Json extension_to_json(const extension::FiniteExtension& ext) {
  Json modulus = Json::array();
  for (auto c : ext.modulus) modulus.push_back(c);
  return Json{{"base", field_to_json(ext.base)}, {"degree", ext.degree}, {"modulus", std::move(modulus)}};
}

Json extension_to_json(const extension::RationalExtension& ext) {
  Json modulus = Json::array();
  for (const auto& c : ext.modulus) modulus.push_back(algebra::format_rational(c.a));
  return Json{{"base", field_to_json(ext.base)}, {"degree", ext.degree}, {"modulus", std::move(modulus)}};
}

namespace {

void check_degree(const Json& j, std::size_t modulus_size) {
  if (j.contains("degree") && integer_of(j["degree"], "degree") + 1 != static_cast<std::int64_t>(modulus_size)) {
    throw InvalidInput("degree does not match the modulus");
  }
}

}  // namespace

extension::FiniteExtension finite_extension_from_json(const Json& j) {
  const auto base = finite_field_from_json(detail::member(j, "base"));
  if (!j.contains("modulus")) {
    const auto degree = integer_of(detail::member(j, "degree"), "degree");
    if (degree < 1) throw InvalidInput("degree must be positive");
    return extension::finite_extension(base, static_cast<int>(degree));
  }
  std::vector<std::uint32_t> modulus;
  const auto p = static_cast<std::int64_t>(base.characteristic());
  for (const auto& c : j["modulus"]) {
    modulus.push_back(static_cast<std::uint32_t>(((integer_of(c, "modulus coefficient") % p) + p) % p));
  }
  check_degree(j, modulus.size());
  return extension::finite_extension(base, std::move(modulus));
}

extension::RationalExtension rational_extension_from_json(const Json& j) {
  const auto base = rational_field_from_json(detail::member(j, "base"));
  std::vector<Rational> modulus;
  for (const auto& c : detail::member(j, "modulus")) modulus.push_back(rational_of(c));
  check_degree(j, modulus.size());
  return extension::rational_extension(base, std::move(modulus));
}

Json resolve_algebra(const Json& doc, const std::filesystem::path& dir) {
  const auto& ref = detail::member(doc, "algebra");
  if (ref.is_object()) return ref;
  if (!ref.is_string()) throw InvalidInput("'algebra' must be an object, a path, or a shipped name");
  const auto text = ref.get<std::string>();
  for (const auto& entry : algebra::shipped_algebra_names()) {
    if (entry.name != text) continue;
    if (algebra::is_rational_shipped(text)) return algebra_to_json(algebra::shipped_rational(text));
    return algebra_to_json(algebra::shipped_finite(text));
  }
  std::filesystem::path path(text);
  if (path.is_relative()) path = dir / path;
  return read_json_file(path);
}

}  // namespace hermcat::io
