#pragma once

#include <string>
#include <vector>

#include "hermcat/algebra/algebra_data.hpp"

namespace hermcat::algebra {

enum class AxiomKind { Associativity, LeftUnit, RightUnit, AntiMultiplicative, InvolutionSquare };

struct AxiomViolation {
  AxiomKind kind;
  std::vector<int> basis_indices;  // the witnessing basis triple, pair or single index
  std::string message;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline const char* axiom_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::Associativity:
      return "associativity";
    case AxiomKind::LeftUnit:
      return "left_unit";
    case AxiomKind::RightUnit:
      return "right_unit";
    case AxiomKind::AntiMultiplicative:
      return "anti_multiplicative";
    case AxiomKind::InvolutionSquare:
      return "involution_square";
  }
  return "unknown";
}

// Checks the axioms on basis elements; by bilinearity this covers all of A.
// Additivity of σ holds by construction (σ is stored as a matrix).
template <class Field>
ValidationReport validate_algebra(const AlgebraData<Field>& d) {
  d.check_shape();
  ValidationReport report;
  const int m = d.dim;
  auto basis = [&](int i) {
    std::vector<typename Field::Elem> e(m, d.field.zero());
    e[i] = d.field.one();
    return e;
  };
  auto label = [](const char* what, std::initializer_list<int> idx) {
    std::string s = what;
    s += " fails on basis elements";
    for (int i : idx) s += " e" + std::to_string(i);
    return s;
  };

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto ij = d.multiply(basis(i), basis(j));
      for (int k = 0; k < m; ++k) {
        if (d.multiply(ij, basis(k)) != d.multiply(basis(i), d.multiply(basis(j), basis(k)))) {
          report.violations.push_back({AxiomKind::Associativity, {i, j, k}, label("(ab)c = a(bc)", {i, j, k})});
        }
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (d.multiply(d.unit, basis(i)) != basis(i)) {
      report.violations.push_back({AxiomKind::LeftUnit, {i}, label("1·a = a", {i})});
    }
    if (d.multiply(basis(i), d.unit) != basis(i)) {
      report.violations.push_back({AxiomKind::RightUnit, {i}, label("a·1 = a", {i})});
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto lhs = d.apply_sigma(d.multiply(basis(i), basis(j)));
      const auto rhs = d.multiply(d.apply_sigma(basis(j)), d.apply_sigma(basis(i)));
      if (lhs != rhs) {
        report.violations.push_back({AxiomKind::AntiMultiplicative, {i, j}, label("σ(ab) = σ(b)σ(a)", {i, j})});
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (d.apply_sigma(d.apply_sigma(basis(i))) != basis(i)) {
      report.violations.push_back({AxiomKind::InvolutionSquare, {i}, label("σ(σ(a)) = a", {i})});
    }
  }
  return report;
}

}  // namespace hermcat::algebra
