#include "galoislie/galois.hpp"

#include <numeric>

#include "galoislie/error.hpp"

namespace galoislie {

Conjugate conjugate(const LieAlgebra& L, const Automorphism& sigma) {
  if (!(sigma.field() == L.field())) throw Error(ErrorKind::FieldMismatch, "automorphism acts on another field");
  std::vector<StructureConstant> cs;
  for (const auto& c : L.constants()) cs.push_back({c.i, c.j, c.k, sigma.apply(c.value)});
  LieAlgebra conj(L.field(), L.dim(), cs, L.labels());
  return {conj, SemiLinearMap{sigma, Matrix::identity(L.field(), L.dim())}};
}

Restriction restrict_scalars(const LieAlgebra& L, const FieldTower& F) {
  const FieldTower& E = L.field();
  const std::size_t d = E.degree_over(F);
  const std::size_t n = L.dim();
  std::vector<FieldElement> basis;
  for (std::size_t s = 0; s < d; ++s) basis.push_back(E.basis_over(F, s));

  RestrictionBookkeeping book{E, F, d, {}};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < d; ++s) {
      book.basis.emplace_back(s, i);
      labels.push_back(s == 0 ? L.labels()[i] : basis[s].to_string() + "*" + L.labels()[i]);
    }

  std::vector<StructureConstant> cs;
  auto add = [&](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
    // [e_s X_i, e_t X_j] with a = i*d+s, b = j*d+t
    const FieldElement& es = basis[a % d];
    const FieldElement& et = basis[b % d];
    FieldElement st = es * et;
    for (const auto& [k, v] : L.bracket_row(i, j)) {
      auto coords = E.coords_over(st * v, F);
      for (std::size_t u = 0; u < d; ++u)
        if (!coords[u].is_zero()) cs.push_back({a, b, k * d + u, coords[u]});
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (L.bracket_row(i, j).empty()) continue;
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) add(i * d + s, j * d + t, i, j);
    }
  return {LieAlgebra(F, n * d, cs, labels), book};
}

LieAlgebra extend_scalars(const LieAlgebra& L, const FieldTower& E) {
  if (!E.has_level(L.field())) throw Error(ErrorKind::NotSuperLevel, "target field does not contain the algebra's field");
  std::vector<StructureConstant> cs;
  for (const auto& c : L.constants()) cs.push_back({c.i, c.j, c.k, E.embed(c.value)});
  return LieAlgebra(E, L.dim(), cs, L.labels());
}

namespace {

// Matrix of sigma on E over F in the power basis (column s = coords of sigma(e_s)).
Matrix sigma_matrix(const Automorphism& sigma, const FieldTower& F) {
  const FieldTower& E = sigma.field();
  const std::size_t d = E.degree_over(F);
  std::vector<Vector> cols;
  for (std::size_t s = 0; s < d; ++s) cols.push_back(E.coords_over(sigma.apply(E.basis_over(F, s)), F));
  return Matrix::from_columns(F, d, cols);
}

}  // namespace

Matrix underlying_iso_from_sigma(const LieAlgebra& L, const Automorphism& sigma) {
  const FieldTower& F = sigma.fixed_level();
  const std::size_t d = L.field().degree_over(F);
  const std::size_t n = L.dim();
  Matrix s = sigma_matrix(sigma, F);
  Matrix m(F, n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) m(i * d + a, i * d + b) = s(a, b);
  return m;
}

CanonicalEmbedding canonical_embedding(const LieAlgebra& L, const FieldTower& F) {
  const FieldTower& E = L.field();
  GaloisGroup G = galois_group(E, F);
  const std::size_t d = E.degree_over(F);
  const std::size_t n = L.dim();
  const std::size_t m = G.order();

  std::vector<LieAlgebra> conjugates;
  for (const auto& sigma : G.elements) conjugates.push_back(conjugate(L, sigma).algebra);
  LieAlgebra sum = conjugates.size() == 1 ? conjugates.front() : direct_sum(conjugates);

  Matrix mat(E, m * n, n * d);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t s = 0; s < d; ++s) {
      FieldElement img = G.elements[b].apply(E.basis_over(F, s));
      for (std::size_t i = 0; i < n; ++i) mat(b * n + i, i * d + s) = img;
    }

  EmbeddingReport rep;
  // F-rank: the images as F-vectors of length m*n*d
  std::vector<Vector> fvecs;
  for (std::size_t c = 0; c < n * d; ++c) {
    Vector v;
    for (std::size_t r = 0; r < m * n; ++r) {
      auto co = E.coords_over(mat(r, c), F);
      v.insert(v.end(), co.begin(), co.end());
    }
    fvecs.push_back(std::move(v));
  }
  const std::size_t frank = rank_of_vectors(F, fvecs, m * n * d);
  rep.injective = frank == n * d;
  rep.dimensions_match = frank == sum.dim();
  rep.e_independent = rank(mat) == n * d;
  return {G, sum, mat, rep};
}

SumConjugateCheck verify_sumconjugate(const LieAlgebra& L, const FieldTower& F) {
  CanonicalEmbedding ce = canonical_embedding(L, F);
  LieAlgebra source = extend_scalars(restrict_scalars(L, F).algebra, L.field());
  MorphismCheck mc = verify_morphism(source, ce.sum_of_conjugates, ce.matrix);
  return {ce.matrix, mc.homomorphism && mc.bijective};
}

bool defined_over_witness_check(const LieAlgebra& L, const FieldTower& F, const Matrix& p) {
  LieAlgebra changed = change_basis(L, p);
  GaloisGroup G = galois_group(L.field(), F);
  for (const auto& c : changed.constants())
    if (!fixed_by_group(c.value, G.elements)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> conjugate_orbit(const LieAlgebra& L, const GaloisGroup& group,
                                                      const IsoOracle& oracle) {
  const std::size_t m = group.order();
  std::vector<LieAlgebra> conj;
  for (const auto& s : group.elements) conj.push_back(conjugate(L, s).algebra);
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> open, refuted;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (find(a) == find(b)) continue;
      IsoVerdict v = conj[a] == conj[b] ? IsoVerdict::Isomorphic : oracle(conj[a], conj[b]);
      if (v == IsoVerdict::Isomorphic)
        parent[find(b)] = find(a);
      else if (v == IsoVerdict::Unknown)
        open.emplace_back(a, b);
      else
        refuted.emplace_back(a, b);
    }
  auto separated = [&](std::size_t a, std::size_t b) {
    for (const auto& [x, y] : refuted)
      if ((find(x) == find(a) && find(y) == find(b)) || (find(x) == find(b) && find(y) == find(a))) return true;
    return false;
  };
  for (const auto& [a, b] : open)
    if (find(a) != find(b) && !separated(a, b))
      throw Error(ErrorKind::OracleUndecided, "isomorphism of conjugates " + group.elements[a].name() + " and " +
                                                  group.elements[b].name() + " undecided");
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> slot(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t r = find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(a);
  }
  return classes;
}

}  // namespace galoislie
