#include "galoislie/decompose.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "galoislie/catalog.hpp"
#include "galoislie/error.hpp"
#include "galoislie/pfaffian.hpp"

namespace galoislie {

AssocAlgebra::AssocAlgebra(FieldTower field, std::size_t n, std::vector<Matrix> basis, bool verify)
    : field_(std::move(field)), n_(n), basis_(std::move(basis)), span_(field_, n * n) {
  for (const auto& b : basis_) {
    if (b.rows() != n_ || b.cols() != n_) throw Error(ErrorKind::WrongShape, "basis matrix has the wrong size");
    if (!span_.add(b.flatten())) throw Error(ErrorKind::Degenerate, "basis matrices are dependent");
  }
  if (!verify) return;
  if (!contains(Matrix::identity(field_, n_))) throw Error(ErrorKind::NotClosed, "identity is not in the span");
  for (const auto& a : basis_)
    for (const auto& b : basis_)
      if (!contains(a * b)) throw Error(ErrorKind::NotClosed, "product leaves the span");
}

bool AssocAlgebra::contains(const Matrix& m) const { return span_.contains(m.flatten()); }

Matrix AssocAlgebra::combine(const Vector& c) const {
  Matrix out(field_, n_, n_);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!c[k].is_zero()) out = out + c[k] * basis_[k];
  return out;
}

AssocAlgebra centroid(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const FieldTower& F = L.field();
  // by_jk[j * n + k] lists (m, c_mj^k)
  std::vector<SparseRow> by_jk(n * n);
  for (const auto& c : L.constants()) {
    by_jk[c.j * n + c.k].emplace_back(c.i, c.value);
    by_jk[c.i * n + c.k].emplace_back(c.j, -c.value);
  }
  // unknown phi(r, c) at r * n + c; phi([e_i, e_j]) = [phi e_i, e_j] for all ordered pairs
  SparseSystem sys(F, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseRow br;
      if (i < j)
        br = L.bracket_row(i, j);
      else if (i > j)
        for (const auto& [m, v] : L.bracket_row(j, i)) br.emplace_back(m, -v);
      for (std::size_t k = 0; k < n; ++k) {
        SparseRow eq;
        for (const auto& [m, v] : br) eq.emplace_back(k * n + m, v);
        for (const auto& [m, v] : by_jk[j * n + k]) eq.emplace_back(m * n + i, -v);
        if (!eq.empty()) sys.add_equation(std::move(eq));
      }
    }
  std::vector<Matrix> basis;
  for (const auto& x : sys.nullspace()) {
    Matrix m(F, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = x[r * n + c];
    basis.push_back(std::move(m));
  }
  // closed under composition and unital by construction
  return AssocAlgebra(F, n, std::move(basis), false);
}

std::vector<Matrix> radical(const AssocAlgebra& A) {
  const std::size_t d = A.dim();
  const std::size_t n = A.matrix_size();
  struct Entry {
    std::size_t r, c;
    FieldElement v;
  };
  std::vector<std::vector<Entry>> nz(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!A.basis()[k](r, c).is_zero()) nz[k].push_back({r, c, A.basis()[k](r, c)});
  Matrix gram(A.field(), d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      FieldElement t = A.field().zero();
      for (const auto& e : nz[a]) {
        const auto& y = A.basis()[b](e.c, e.r);
        if (!y.is_zero()) t += e.v * y;
      }
      gram(a, b) = t;
      gram(b, a) = t;
    }
  std::vector<Matrix> out;
  for (const auto& c : nullspace(gram)) out.push_back(A.combine(c));
  return out;
}

Polynomial matrix_minpoly(const Matrix& m) {
  const FieldTower& F = m.field();
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::WrongShape, "minimal polynomial of a non-square matrix");
  Subspace span(F, n * n);
  std::vector<Vector> powers;
  Matrix p = Matrix::identity(F, n);
  while (true) {
    Vector flat = p.flatten();
    if (!span.add(flat)) {
      auto c = solve(Matrix::from_columns(F, n * n, powers), flat);
      std::vector<FieldElement> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(F.one());
      return Polynomial(F, coeffs);
    }
    powers.push_back(std::move(flat));
    p = p * m;
  }
}

namespace {

// h(t + c)
Polynomial shift(const Polynomial& h, const FieldElement& c) {
  const FieldTower& F = h.field();
  Polynomial lin(F, {c, F.one()});
  Polynomial out(F);
  for (long k = h.degree(); k >= 0; --k) out = out * lin + Polynomial(F, {h.coeff(static_cast<std::size_t>(k))});
  return out;
}

Rational norm_to_Q(const FieldElement& x) {
  const FieldTower& E = x.field();
  const FieldTower Q = FieldTower::rationals();
  const std::size_t D = E.absolute_degree();
  Matrix m(Q, D, D);
  for (std::size_t j = 0; j < D; ++j) {
    std::vector<Rational> unit(D, Rational(0));
    unit[j] = Rational(1);
    auto prod = x * E.from_flat(unit);
    for (std::size_t i = 0; i < D; ++i) m(i, j) = Q.from_rational(prod.flat()[i]);
  }
  return determinant(m).to_rational();
}

// Norm of f from E[t] down to Q[t], by interpolation.
Polynomial norm_polynomial(const Polynomial& f) {
  const FieldTower& E = f.field();
  const FieldTower Q = FieldTower::rationals();
  const std::size_t deg = E.absolute_degree() * static_cast<std::size_t>(f.degree());
  std::vector<Rational> xs, dd;
  for (std::size_t k = 0; k <= deg; ++k) {
    xs.emplace_back(static_cast<long>(k));
    dd.push_back(norm_to_Q(f.eval(E.from_rational(xs.back()))));
  }
  // Newton divided differences
  for (std::size_t level = 1; level <= deg; ++level)
    for (std::size_t k = deg; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
  Polynomial out(Q);
  for (std::size_t k = deg + 1; k-- > 0;)
    out = out * Polynomial(Q, {Q.from_rational(-xs[k]), Q.one()}) + Polynomial(Q, {Q.from_rational(dd[k])});
  return out;
}

std::optional<Polynomial> split_by_norm(const Polynomial& f) {
  const FieldTower& E = f.field();
  const FieldTower Q = FieldTower::rationals();
  if (E.absolute_degree() * static_cast<std::size_t>(f.degree()) > 24) return std::nullopt;
  FieldElement beta = E.zero();
  for (std::size_t d = 1; d <= E.depth(); ++d) beta += Rational(static_cast<long>(d)) * E.embed(E.level(d).generator());
  for (long s = 0; s <= 8; ++s) {
    FieldElement gamma = Rational(s) * beta;
    Polynomial fs = shift(f, -gamma);
    Polynomial N = norm_polynomial(fs);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    std::vector<Factor> factors;
    try {
      factors = detail::factor_over_Q_bounded(N, 24);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeTooLarge) throw;
      return std::nullopt;
    }
    if (factors.size() <= 1) return std::nullopt;
    for (const auto& fac : factors) {
      std::vector<FieldElement> c;
      for (const auto& x : fac.poly.coeffs()) c.push_back(E.from_rational(x.to_rational()));
      Polynomial h = gcd(fs, Polynomial(E, c));
      if (h.degree() > 0 && h.degree() < f.degree()) return shift(h, gamma).monic();
    }
    return std::nullopt;
  }
  return std::nullopt;
}

Matrix eval_at(const Polynomial& p, const Matrix& m) {
  const FieldTower& F = m.field();
  Matrix out(F, m.rows(), m.cols());
  Matrix id = Matrix::identity(F, m.rows());
  for (long k = p.degree(); k >= 0; --k) out = out * m + p.coeff(static_cast<std::size_t>(k)) * id;
  return out;
}

std::optional<Matrix> spectral_idempotent(const Matrix& t) {
  Polynomial m = matrix_minpoly(t);
  auto g = find_proper_factor(m);
  if (!g) return std::nullopt;
  // G collects every power of g in m, so G and m / G are coprime
  Polynomial G = *g;
  while (true) {
    auto [q, r] = m.divmod(G * *g);
    if (!r.is_zero()) break;
    G = G * *g;
  }
  Polynomial H = m.divmod(G).first;
  if (H.degree() < 1) return std::nullopt;
  ExtGcd eg = ext_gcd(G, H);
  Matrix e = eval_at(eg.u * G, t);
  if (e.is_zero() || e == Matrix::identity(t.field(), t.rows())) return std::nullopt;
  return e;
}

std::mt19937& idempotent_rng() {
  static thread_local std::mt19937 rng;
  return rng;
}

std::optional<Matrix> idempotent_from_basis(const AssocAlgebra& A) {
  for (const auto& b : A.basis())
    if (auto e = spectral_idempotent(b)) return e;
  return std::nullopt;
}

std::optional<Matrix> idempotent_from_random(const AssocAlgebra& A) {
  auto& rng = idempotent_rng();
  rng.seed(20240611);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Vector c;
    for (std::size_t k = 0; k < A.dim(); ++k) c.push_back(A.field().from_rational(coeff(rng)));
    if (is_zero(c)) continue;
    if (auto e = spectral_idempotent(A.combine(c))) return e;
  }
  return std::nullopt;
}

// The quotient by the radical is a field when some element's minimal
// polynomial has an irreducible squarefree part of the quotient's dimension.
bool quotient_is_field_over_Q(const AssocAlgebra& A, std::size_t quotient_dim) {
  if (!A.field().is_rationals()) return false;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Vector c;
    for (std::size_t k = 0; k < A.dim(); ++k) c.push_back(A.field().from_rational(coeff(rng)));
    Polynomial s = squarefree_part(matrix_minpoly(A.combine(c)));
    if (static_cast<std::size_t>(s.degree()) != quotient_dim) continue;
    try {
      if (is_irreducible_over_Q(s)) return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeTooLarge) throw;
      return false;
    }
  }
  return false;
}

// Columns of e chosen greedily, first those with a nonzero diagonal entry, so
// that a block projection returns the block's own basis vectors.
std::vector<Vector> image_basis(const Matrix& e) {
  const std::size_t n = e.rows();
  Subspace span(e.field(), n);
  std::vector<Vector> out;
  std::vector<bool> used(n, false);
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k] || (pass == 0 && e(k, k).is_zero())) continue;
      Vector v = e.column(k);
      if (!is_zero(v) && span.add(v)) {
        out.push_back(std::move(v));
        used[k] = true;
      }
    }
  return out;
}

struct Part {
  std::vector<Vector> basis;
  LieAlgebra algebra;
  Certificate certificate;
  std::string reason;
};

void split(const LieAlgebra& S, std::vector<Part>& out) {
  auto leaf = [&](Certificate c, std::string reason) {
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < S.dim(); ++k) basis.push_back(S.basis_vector(k));
    out.push_back({basis, S, c, std::move(reason)});
  };
  if (S.dim() == 1) return leaf(Certificate::CertifiedIndecomposable, "dimension one");
  AssocAlgebra A = centroid(S);
  if (A.dim() == 1) return leaf(Certificate::CertifiedIndecomposable, "centroid is the scalars");
  auto e = idempotent_from_basis(A);
  std::size_t quotient_dim = 0;
  if (!e) {
    quotient_dim = A.dim() - radical(A).size();
    if (quotient_dim == 1) return leaf(Certificate::CertifiedIndecomposable, "centroid is local");
    e = idempotent_from_random(A);
  }
  if (!e) {
    if (quotient_is_field_over_Q(A, quotient_dim))
      return leaf(Certificate::CertifiedIndecomposable, "centroid modulo its radical is a field");
    return leaf(Certificate::HeuristicIndecomposable, "no splitting idempotent found in the centroid");
  }
  Matrix f = Matrix::identity(S.field(), S.dim()) - *e;
  for (const auto& piece : {image_basis(*e), image_basis(f)}) {
    LieAlgebra sub = subalgebra(S, piece);
    std::vector<Part> children;
    split(sub, children);
    for (auto& child : children) {
      std::vector<Vector> mapped;
      for (const auto& c : child.basis) {
        Vector v = S.zero_vector();
        for (std::size_t k = 0; k < c.size(); ++k)
          if (!c[k].is_zero()) axpy(v, c[k], piece[k]);
        mapped.push_back(std::move(v));
      }
      out.push_back({std::move(mapped), std::move(child.algebra), child.certificate, std::move(child.reason)});
    }
  }
}

}  // namespace

std::optional<Polynomial> find_proper_factor(const Polynomial& p) {
  if (p.degree() < 2) return std::nullopt;
  auto sqf = squarefree_decomposition(p);
  std::vector<Polynomial> parts;
  for (const auto& f : sqf)
    if (f.degree() > 0) parts.push_back(f.monic());
  if (parts.size() > 1) return parts.front();
  const Polynomial& f = parts.front();
  if (f.degree() < 2) return std::nullopt;
  const FieldTower& E = f.field();
  if (f.has_rational_coeffs()) {
    std::vector<Rational> c;
    for (const auto& x : f.coeffs()) c.push_back(x.to_rational());
    try {
      auto factors = detail::factor_over_Q_bounded(Polynomial::from_rationals(FieldTower::rationals(), c), 24);
      if (factors.size() > 1) {
        std::vector<FieldElement> g;
        for (const auto& x : factors.front().poly.coeffs()) g.push_back(E.from_rational(x.to_rational()));
        return Polynomial(E, g);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeTooLarge) throw;
    }
  }
  if (E.is_rationals()) return std::nullopt;
  return split_by_norm(f);
}

std::optional<Matrix> find_idempotent(const AssocAlgebra& A) {
  if (auto e = idempotent_from_basis(A)) return e;
  return idempotent_from_random(A);
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::CertifiedIndecomposable:
      return "CertifiedIndecomposable";
    case Certificate::HeuristicIndecomposable:
      return "HeuristicIndecomposable";
    case Certificate::Unknown:
      break;
  }
  return "Unknown";
}

bool Decomposition::all_certified() const {
  return std::all_of(summands.begin(), summands.end(),
                     [](const Summand& s) { return s.certificate == Certificate::CertifiedIndecomposable; });
}

Decomposition decompose_indecomposable(const LieAlgebra& L) {
  std::vector<Part> parts;
  split(L, parts);
  // order summands by the first coordinate they touch
  auto lead = [](const Part& p) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& v : p.basis)
      for (std::size_t k = 0; k < v.size() && k < best; ++k)
        if (!v[k].is_zero()) best = k;
    return best;
  };
  std::stable_sort(parts.begin(), parts.end(), [&](const Part& a, const Part& b) { return lead(a) < lead(b); });
  Decomposition d;
  for (auto& p : parts) {
    std::vector<std::string> labels;
    for (const auto& v : p.basis) labels.push_back(L.format(v));
    LieAlgebra named(L.field(), p.basis.size(), p.algebra.constants(), labels);
    d.summands.push_back({std::move(p.basis), std::move(named), p.certificate, std::move(p.reason)});
  }
  return d;
}

bool verify_decomposition(const LieAlgebra& L, const std::vector<std::vector<Vector>>& bases) {
  Subspace total(L.field(), L.dim());
  std::size_t sum = 0;
  for (const auto& b : bases) {
    auto check = ideal_check(L, b);
    if (!check.is_ideal || check.basis.empty()) return false;
    sum += check.basis.size();
    for (const auto& v : check.basis) total.add(v);
  }
  return sum == L.dim() && total.dim() == L.dim();
}

IsoVerdict iso_oracle(const LieAlgebra& a, const LieAlgebra& b, const std::optional<Matrix>& certificate) {
  if (!(a.field() == b.field())) return IsoVerdict::Unknown;
  if (a.dim() != b.dim()) return IsoVerdict::NotIsomorphic;
  if (a == b) return IsoVerdict::Isomorphic;
  if (certificate) {
    auto mc = verify_morphism(a, b, *certificate);
    if (mc.homomorphism && mc.bijective) return IsoVerdict::Isomorphic;
  }
  if (!(fingerprint(a) == fingerprint(b))) return IsoVerdict::NotIsomorphic;
  if (refute_isomorphism_by_projective_invariant(a, b) == CRefutation::Refuted) return IsoVerdict::NotIsomorphic;
  auto sa = codim_one_spectrum(a), sb = codim_one_spectrum(b);
  if (sa && sb && spectra_equivalent(*sa, *sb) == false) return IsoVerdict::NotIsomorphic;
  return IsoVerdict::Unknown;
}

namespace {

// Kuhn's augmenting paths; returns match_of_right (or npos) for each right vertex.
std::vector<std::size_t> max_matching(const std::vector<std::vector<bool>>& edge, std::size_t nb) {
  const std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> right(nb, npos);
  for (std::size_t a = 0; a < edge.size(); ++a) {
    std::vector<bool> seen(nb, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
      for (std::size_t v = 0; v < nb; ++v) {
        if (!edge[u][v] || seen[v]) continue;
        seen[v] = true;
        if (right[v] == npos || augment(right[v])) {
          right[v] = u;
          return true;
        }
      }
      return false;
    };
    augment(a);
  }
  return right;
}

std::size_t matched_count(const std::vector<std::size_t>& right) {
  return static_cast<std::size_t>(
      std::count_if(right.begin(), right.end(), [](std::size_t x) { return x != static_cast<std::size_t>(-1); }));
}

}  // namespace

MatchResult krull_schmidt_match(const Decomposition& a, const Decomposition& b, const IsoOracle& oracle) {
  const std::size_t na = a.summands.size(), nb = b.summands.size();
  std::vector<std::vector<IsoVerdict>> v(na, std::vector<IsoVerdict>(nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) v[i][j] = oracle(a.summands[i].algebra, b.summands[j].algebra);

  MatchResult r;
  if (na == nb) {
    std::vector<std::vector<bool>> iso(na, std::vector<bool>(nb));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) iso[i][j] = v[i][j] == IsoVerdict::Isomorphic;
    auto right = max_matching(iso, nb);
    if (matched_count(right) == na) {
      r.verdict = IsoVerdict::Isomorphic;
      for (std::size_t j = 0; j < nb; ++j) r.pairing.emplace_back(right[j], j);
      std::sort(r.pairing.begin(), r.pairing.end());
      return r;
    }
  }
  if (!a.all_certified() || !b.all_certified()) return r;
  if (na != nb) {
    r.verdict = IsoVerdict::NotIsomorphic;
    return r;
  }
  std::vector<std::vector<bool>> open(na, std::vector<bool>(nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) open[i][j] = v[i][j] != IsoVerdict::NotIsomorphic;
  if (matched_count(max_matching(open, nb)) < na) r.verdict = IsoVerdict::NotIsomorphic;
  return r;
}

FormCount count_forms(const LieAlgebra& L, const FieldTower& F) {
  GaloisGroup G = galois_group(L.field(), F);
  Decomposition D = decompose_indecomposable(L);
  for (std::size_t k = 0; k < D.summands.size(); ++k)
    if (D.summands[k].certificate != Certificate::CertifiedIndecomposable)
      throw Error(ErrorKind::UncertifiedDecomposition,
                  "summand " + std::to_string(k + 1) + " is not certified indecomposable");

  struct Class {
    LieAlgebra rep;
    std::string name;
    std::size_t multiplicity;
  };
  std::vector<Class> classes;
  std::vector<std::size_t> parent;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto locate = [&](const LieAlgebra& A, const std::string& what) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      IsoVerdict v = iso_oracle(classes[c].rep, A);
      if (v == IsoVerdict::Isomorphic) return c;
      if (v == IsoVerdict::Unknown)
        throw Error(ErrorKind::OracleUndecided, "cannot decide whether " + what + " is isomorphic to " + classes[c].name);
    }
    return std::nullopt;
  };

  const std::size_t summands = D.summands.size();
  for (std::size_t k = 0; k < summands; ++k) {
    std::string name = "S" + std::to_string(k + 1);
    if (auto c = locate(D.summands[k].algebra, name)) {
      ++classes[*c].multiplicity;
    } else {
      classes.push_back({D.summands[k].algebra, name, 1});
      parent.push_back(parent.size());
    }
  }
  const std::size_t original = classes.size();
  for (std::size_t c = 0; c < original; ++c)
    for (const auto& sigma : G.elements) {
      if (sigma.is_identity()) continue;
      LieAlgebra conj = conjugate(classes[c].rep, sigma).algebra;
      std::string name = sigma.name() + "(" + classes[c].name + ")";
      if (auto d = locate(conj, name)) {
        parent[find(*d)] = find(c);
      } else {
        classes.push_back({conj, name, 0});
        parent.push_back(find(c));
      }
    }

  // orbits in order of first appearance
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<long> slot(classes.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::size_t r = find(c);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[r])].push_back(c);
  }

  // all ways to spread k summands over the classes of each orbit
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& orbit : orbits) {
    std::size_t k = 0;
    for (auto c : orbit) k += classes[c].multiplicity;
    std::vector<std::vector<std::size_t>> spreads;
    std::vector<std::size_t> cur(orbit.size(), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
      if (pos + 1 == orbit.size()) {
        cur[pos] = left;
        spreads.push_back(cur);
        return;
      }
      for (std::size_t take = left + 1; take-- > 0;) {
        cur[pos] = take;
        rec(pos + 1, left - take);
      }
    };
    rec(0, k);
    choices.push_back(std::move(spreads));
  }

  FormCount out;
  out.count = 1;
  for (const auto& ch : choices) out.count *= ch.size();
  std::vector<std::size_t> idx(orbits.size(), 0);
  while (true) {
    std::vector<LieAlgebra> parts;
    FormWitness w{L, {}};
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      const auto& spread = choices[o][idx[o]];
      for (std::size_t p = 0; p < spread.size(); ++p)
        for (std::size_t r = 0; r < spread[p]; ++r) {
          parts.push_back(classes[orbits[o][p]].rep);
          w.parts.push_back(classes[orbits[o][p]].name);
        }
    }
    w.algebra = parts.size() == 1 ? parts.front() : direct_sum(parts);
    out.witnesses.push_back(std::move(w));
    std::size_t o = 0;
    while (o < orbits.size() && ++idx[o] == choices[o].size()) idx[o++] = 0;
    if (o == orbits.size()) break;
  }
  return out;
}

}  // namespace galoislie
