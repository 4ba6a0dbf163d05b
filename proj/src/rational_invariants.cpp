#include "hermcat/witt/rational_invariants.hpp"

#include <utility>

#include "hermcat/support/errors.hpp"

namespace hermcat::witt {

namespace {

void trim(RationalPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPolynomial& p) { return static_cast<int>(p.size()) - 1; }

RationalPolynomial derivative(const RationalPolynomial& p) {
  RationalPolynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RationalPolynomial subtract(RationalPolynomial a, const RationalPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns (quotient, remainder).
std::pair<RationalPolynomial, RationalPolynomial> divide(RationalPolynomial a, const RationalPolynomial& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(a);
  RationalPolynomial q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

RationalPolynomial monic(RationalPolynomial p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Rational evaluate(const RationalPolynomial& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Sign of p at +∞ (positive) or −∞ (negative).
int sign_at_infinity(const RationalPolynomial& p, bool positive) {
  int s = sign(p.back());
  if (!positive && degree(p) % 2 == 1) s = -s;
  return s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RationalPolynomial characteristic_polynomial(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("characteristic polynomial needs a square matrix");
  }
  // M_k = A·M_{k−1} + c_{n−k+1}·I,  c_{n−k} = −tr(A·M_k)/k.
  RationalPolynomial c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix prod(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        prod[i][j] = s;
      }
      prod[i][i] += c[n - k + 1];
    }
    mk = std::move(prod);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * mk[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p) {
  RationalPolynomial f = monic(p);
  std::vector<RationalPolynomial> factors;
  if (degree(f) < 1) return factors;
  const auto df = derivative(f);
  RationalPolynomial a = gcd(f, df);
  RationalPolynomial b = divide(f, a).first;
  RationalPolynomial c = divide(df, a).first;
  RationalPolynomial d = subtract(c, derivative(b));
  while (degree(b) >= 1) {
    RationalPolynomial g = gcd(b, d);
    factors.push_back(g);
    b = divide(b, g).first;
    c = divide(d, g).first;
    d = subtract(c, derivative(b));
  }
  while (!factors.empty() && degree(factors.back()) < 1) factors.pop_back();
  return factors;
}

std::size_t sturm_root_count(const RationalPolynomial& p, const Rational* lo, const Rational* hi) {
  RationalPolynomial f = p;
  trim(f);
  if (degree(f) < 1) return 0;
  std::vector<RationalPolynomial> chain{f, derivative(f)};
  while (degree(chain.back()) >= 1) {
    auto r = divide(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  auto changes = [&](const Rational* x, bool positive) {
    std::vector<int> signs;
    for (const auto& q : chain) signs.push_back(x ? sign(evaluate(q, *x)) : sign_at_infinity(q, positive));
    return sign_changes(signs);
  };
  return changes(lo, false) - changes(hi, true);
}

RationalSymmetricInvariants rational_symmetric_invariants(const RationalMatrix& gram) {
  const std::size_t n = gram.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw DimensionMismatch("Gram matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw InvalidInput("Gram matrix is not symmetric");
    }
  }
  RationalSymmetricInvariants inv;

  // Determinant class from a congruence diagonalization.
  RationalMatrix a = gram;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i) {
      if (a[i][i] != 0) pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonal entries vanish: make one non-zero with e_i + e_j.
      for (std::size_t i = k; i < n && pivot == n; ++i) {
        for (std::size_t j = i + 1; j < n && pivot == n; ++j) {
          if (a[i][j] == 0) continue;
          for (std::size_t l = 0; l < n; ++l) a[i][l] += a[j][l];
          for (std::size_t l = 0; l < n; ++l) a[l][i] += a[l][j];
          pivot = i;
        }
      }
    }
    if (pivot == n) break;
    std::swap(a[k], a[pivot]);
    for (auto& row : a) std::swap(row[k], row[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      if (f == 0) continue;
      for (std::size_t l = k; l < n; ++l) a[i][l] -= f * a[k][l];
      for (std::size_t l = k; l < n; ++l) a[l][i] -= f * a[l][k];
    }
    det *= a[k][k];
    ++inv.rank;
  }
  inv.determinant_class = algebra::square_class(det);

  // Inertia from the characteristic polynomial with the root 0 removed.
  auto chi = characteristic_polynomial(gram);
  std::size_t nullity = 0;
  while (nullity < chi.size() && chi[nullity] == 0) ++nullity;
  chi.erase(chi.begin(), chi.begin() + static_cast<long>(nullity));
  if (n - nullity != inv.rank) throw Error("rank and characteristic polynomial disagree");
  const auto factors = square_free_decomposition(chi);
  const Rational zero = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    inv.negative += (i + 1) * sturm_root_count(factors[i], nullptr, &zero);
    inv.positive += (i + 1) * sturm_root_count(factors[i], &zero, nullptr);
  }
  if (inv.positive + inv.negative != inv.rank) throw Error("symmetric matrix with non-real eigenvalues");
  return inv;
}

RationalSymmetricInvariants rational_symmetric_invariants(const forms::SesquilinearSystem<algebra::RationalAlgebra>& form) {
  const auto& alg = form.algebra;
  if (alg.dim() != 1 || alg.field().is_quadratic()) throw InvalidInput("classical invariants need the base ℚ (whose only involution is trivial)");
  if (form.index_count() != 1) throw InvalidInput("classical invariants need a single form");
  RationalMatrix m(form.rank, std::vector<Rational>(form.rank));
  for (std::size_t i = 0; i < form.rank; ++i) {
    for (std::size_t j = 0; j < form.rank; ++j) {
      const auto& q = form.gram()(i, j)[0];
      m[i][j] = q.a / alg.one()[0].a;
    }
  }
  return rational_symmetric_invariants(m);
}

}  // namespace hermcat::witt
