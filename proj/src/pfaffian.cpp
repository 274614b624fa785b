#include "galoislie/pfaffian.hpp"

#include <functional>

#include "galoislie/error.hpp"

namespace galoislie {

MultiPoly MultiPoly::constant(const FieldElement& c, std::size_t nvars) {
  MultiPoly p(c.field(), nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldTower& field, std::size_t nvars, std::size_t k) {
  MultiPoly p(field, nvars);
  Monomial m(nvars, 0);
  m.at(k) = 1;
  p.add_term(m, field.one());
  return p;
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (auto e : m) d += e;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (m.size() != nvars_) throw Error(ErrorKind::WrongShape, "monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MultiPoly::Monomial m = ma;
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly operator*(const FieldElement& c, const MultiPoly& a) {
  MultiPoly r(a.field_, a.nvars_);
  for (const auto& [m, x] : a.terms_) r.add_term(m, c * x);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::substitute_linear(const Matrix& a) const {
  if (a.rows() != nvars_ || a.cols() != nvars_) throw Error(ErrorKind::WrongShape, "substitution matrix size");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    MultiPoly li(field_, nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) li += a(i, j) * variable(field_, nvars_, j);
    images.push_back(li);
  }
  MultiPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(c, nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = t * images[i];
    out += t;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  auto var = [&](std::size_t k) {
    if (nvars_ == 2) return std::string(k == 0 ? "x" : "y");
    return "z" + std::to_string(k + 1);
  };
  std::string out;
  // highest power of the first variable first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var(k);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    bool neg = c.is_rational() && c.to_rational().sign() < 0;
    FieldElement a = neg ? -c : c;
    std::string cs = a.to_string();
    bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos || cs[0] == '-';
    std::string term;
    if (mono.empty())
      term = compound ? "(" + cs + ")" : cs;
    else if (a.is_one())
      term = mono;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

namespace {

// Sum over perfect matchings of {0..n-1}: sign * prod entry(i, j), pairing the
// smallest unmatched index with each later one in turn.
template <typename T>
T matching_expansion(std::size_t n, const std::function<T(std::size_t, std::size_t)>& entry, const T& zero,
                     const T& one) {
  if (n % 2 == 1) return zero;
  std::vector<bool> used(n, false);
  T total = zero;
  std::function<void(T, bool)> rec = [&](T acc, bool negative) {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      if (negative)
        total = total - acc;
      else
        total = total + acc;
      return;
    }
    used[i] = true;
    std::size_t between = 0;  // unmatched indices strictly between i and j
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      rec(acc * entry(i, j), negative != (between % 2 == 1));
      used[j] = false;
      ++between;
    }
    used[i] = false;
  };
  rec(one, false);
  return total;
}

}  // namespace

MultiPoly pfaffian_of_matrix(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::WrongShape, "empty matrix");
  const FieldTower& F = m[0][0].field();
  const std::size_t nv = m[0][0].nvars();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::WrongShape, "matrix is not square");
    if (!m[i][i].is_zero()) throw Error(ErrorKind::NotSkew, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m[i][j] == -m[j][i])) throw Error(ErrorKind::NotSkew, "matrix is not skew-symmetric");
  }
  return matching_expansion<MultiPoly>(
      n, [&](std::size_t i, std::size_t j) { return m[i][j]; }, MultiPoly(F, nv), MultiPoly::constant(F.one(), nv));
}

FieldElement pfaffian_of_matrix(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::WrongShape, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!m(i, i).is_zero()) throw Error(ErrorKind::NotSkew, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m(i, j) == -m(j, i))) throw Error(ErrorKind::NotSkew, "matrix is not skew-symmetric");
  }
  const FieldTower& F = m.field();
  return matching_expansion<FieldElement>(
      n, [&](std::size_t i, std::size_t j) { return m(i, j); }, F.zero(), F.one());
}

TwoStepSplit two_step_type(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> all;
  for (std::size_t k = 0; k < n; ++k) all.push_back(L.basis_vector(k));
  auto comm = bracket_span(L, all, all);
  if (!bracket_span(L, all, comm).empty()) throw Error(ErrorKind::NotTwoStep, "algebra is not of class <= 2");
  Echelon e = rref(L.field(), comm, n);
  TwoStepSplit s;
  s.Z = e.rows;
  s.z_pivots = e.pivots;
  s.q = s.Z.size();
  s.p = n - s.q;
  std::vector<bool> pivot(n, false);
  for (auto p : e.pivots) pivot[p] = true;
  for (std::size_t k = 0; k < n; ++k)
    if (!pivot[k]) s.V.push_back(L.basis_vector(k));
  return s;
}

PfaffianForm pfaffian_form(const LieAlgebra& L) {
  TwoStepSplit s = two_step_type(L);
  if (s.p % 2 == 1) throw Error(ErrorKind::OddP, "complement dimension p = " + std::to_string(s.p) + " is odd");
  const FieldTower& F = L.field();
  PolyMatrix J(s.p, std::vector<MultiPoly>(s.p, MultiPoly(F, s.q)));
  for (std::size_t a = 0; a < s.p; ++a)
    for (std::size_t b = a + 1; b < s.p; ++b) {
      Vector w = L.bracket(s.V[a], s.V[b]);
      MultiPoly entry(F, s.q);
      // coefficient of Z_k in w is its value at the k-th pivot
      for (std::size_t k = 0; k < s.q; ++k) entry += w[s.z_pivots[k]] * MultiPoly::variable(F, s.q, k);
      J[a][b] = entry;
      J[b][a] = -entry;
    }
  if (s.p == 0) return {MultiPoly::constant(F.one(), s.q), s};
  return {pfaffian_of_matrix(J), s};
}

namespace {

struct Quartic {
  FieldElement a, b, c, d, e;
};

Quartic quartic_coeffs(const MultiPoly& f) {
  if (f.nvars() != 2) throw Error(ErrorKind::WrongShape, "binary form expected");
  if (!f.is_zero() && f.homogeneous_degree() != 4u) throw Error(ErrorKind::WrongShape, "quartic form expected");
  return {f.coeff({4, 0}), f.coeff({3, 1}), f.coeff({2, 2}), f.coeff({1, 3}), f.coeff({0, 4})};
}

}  // namespace

FieldElement invariant_S(const MultiPoly& f) {
  auto [a, b, c, d, e] = quartic_coeffs(f);
  return a * e - Rational(4) * b * d + Rational(3) * c * c;
}

FieldElement invariant_T(const MultiPoly& f) {
  auto [a, b, c, d, e] = quartic_coeffs(f);
  return a * c * e - a * d * d + Rational(2) * b * c * d - b * b * e - c * c * c;
}

FieldElement invariant_c(const MultiPoly& f) {
  FieldElement t = invariant_T(f);
  if (t.is_zero()) throw Error(ErrorKind::TVanishes, "T vanishes, c is undefined");
  FieldElement s = invariant_S(f);
  return s * s * s / (t * t);
}

FieldElement invariant_c(const LieAlgebra& L) {
  auto fp = fingerprint(L);
  if (fp.two_step_type != std::make_pair<std::size_t, std::size_t>(8, 2))
    throw Error(ErrorKind::WrongShape, "c is defined for algebras of type (8,2)");
  return invariant_c(pfaffian_form(L).poly);
}

CRefutation refute_isomorphism_by_c(const LieAlgebra& a, const LieAlgebra& b) {
  try {
    FieldElement ca = invariant_c(a);
    FieldElement cb = invariant_c(b);
    if (!(ca.field() == cb.field())) return CRefutation::Inconclusive;
    return ca == cb ? CRefutation::Inconclusive : CRefutation::Refuted;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TVanishes || e.kind() == ErrorKind::WrongShape || e.kind() == ErrorKind::NotTwoStep)
      return CRefutation::Inconclusive;
    throw;
  }
}

namespace {

// Coefficients read against the binomial weights 1, 4, 6, 4, 1.
Quartic weighted_coeffs(const MultiPoly& f) {
  auto q = quartic_coeffs(f);
  return {q.a, Rational(1, 4) * q.b, Rational(1, 6) * q.c, Rational(1, 4) * q.d, q.e};
}

}  // namespace

FieldElement weighted_invariant_S(const MultiPoly& f) {
  auto [a, b, c, d, e] = weighted_coeffs(f);
  return a * e - Rational(4) * b * d + Rational(3) * c * c;
}

FieldElement weighted_invariant_T(const MultiPoly& f) {
  auto [a, b, c, d, e] = weighted_coeffs(f);
  return a * c * e - a * d * d + Rational(2) * b * c * d - b * b * e - c * c * c;
}

std::optional<FieldElement> projective_invariant(const MultiPoly& f) {
  FieldElement t = weighted_invariant_T(f);
  if (t.is_zero()) return std::nullopt;
  FieldElement s = weighted_invariant_S(f);
  return s * s * s / (t * t);
}

CRefutation refute_isomorphism_by_projective_invariant(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field() == b.field())) return CRefutation::Inconclusive;
  auto fa = fingerprint(a), fb = fingerprint(b);
  const auto shape = std::make_pair<std::size_t, std::size_t>(8, 2);
  if (fa.two_step_type != shape || fb.two_step_type != shape) return CRefutation::Inconclusive;
  auto ca = projective_invariant(pfaffian_form(a).poly);
  auto cb = projective_invariant(pfaffian_form(b).poly);
  if (!ca || !cb) return CRefutation::Inconclusive;
  return *ca == *cb ? CRefutation::Inconclusive : CRefutation::Refuted;
}

bool projective_equivalence_check(const MultiPoly& f1, const MultiPoly& f2, const Matrix& a, const FieldElement& k) {
  if (k.is_zero()) throw Error(ErrorKind::ZeroScalar, "k must be nonzero");
  if (!inverse(a)) throw Error(ErrorKind::SingularMatrix, "A must be invertible");
  return f1 == k * f2.substitute_linear(a);
}

}  // namespace galoislie
