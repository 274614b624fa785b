#include "galoislie/catalog.hpp"

#include "galoislie/error.hpp"
#include "galoislie/polynomial.hpp"

namespace galoislie {

LieAlgebra heisenberg(const FieldTower& field) {
  return LieAlgebra(field, 3, {{0, 1, 2, field.one()}}, {"X", "Y", "Z"});
}

LieAlgebra abelian(const FieldTower& field, std::size_t n) { return LieAlgebra(field, n, {}); }

LieAlgebra g_lambda(const FieldElement& lambda) {
  const FieldTower& F = lambda.field();
  const FieldElement one = F.one();
  // X1..X8 = 0..7, Z1 = 8, Z2 = 9
  std::vector<StructureConstant> cs{
      {0, 4, 8, one}, {1, 5, 8, one}, {2, 6, 8, one},  {3, 7, 8, one},    {1, 4, 9, one},
      {2, 5, 9, one}, {3, 6, 9, one}, {0, 7, 9, -one}, {1, 6, 9, -lambda},
  };
  return LieAlgebra(F, 10, cs, {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8", "Z1", "Z2"});
}

LieAlgebra r3_lambda(const FieldElement& lambda) {
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "r3 needs lambda != 0");
  const FieldTower& F = lambda.field();
  return LieAlgebra(F, 3, {{0, 1, 1, F.one()}, {0, 2, 2, lambda}}, {"X1", "X2", "X3"});
}

LieAlgebra r3_lambda_plus_abelian(const FieldElement& lambda) {
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "r3 needs lambda != 0");
  const FieldTower& F = lambda.field();
  return LieAlgebra(F, 4, {{0, 1, 1, F.one()}, {0, 2, 2, lambda}}, {"X1", "X2", "X3", "X4"});
}

bool r3_iso_criterion(const FieldElement& lambda, const FieldElement& mu) {
  if (lambda.is_zero() || mu.is_zero()) throw Error(ErrorKind::ZeroLambda, "r3 needs lambda != 0");
  return lambda == mu || (lambda * mu).is_one();
}

LieAlgebra g1_alpha(const FieldElement& alpha) {
  if (alpha.is_zero()) throw Error(ErrorKind::ZeroAlpha, "g1 needs alpha != 0");
  const FieldTower& F = alpha.field();
  return LieAlgebra(F, 4, {{0, 1, 1, F.one()}, {0, 2, 2, F.one()}, {0, 3, 3, alpha}}, {"X1", "X2", "X3", "X4"});
}

namespace {

// Characteristic polynomial of a square matrix via the Faddeev-LeVerrier
// recursion (exact, characteristic 0).
Polynomial charpoly(const Matrix& m) {
  const FieldTower& F = m.field();
  const std::size_t n = m.rows();
  std::vector<FieldElement> c(n + 1, F.zero());
  c[n] = F.one();
  Matrix mk = Matrix::identity(F, n);
  Matrix am(F, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    am = m * mk;
    c[n - k] = -am.trace() * Rational(1, static_cast<long>(k));
    mk = am + c[n - k] * Matrix::identity(F, n);
  }
  return Polynomial(F, c);
}

}  // namespace

std::optional<std::vector<FieldElement>> codim_one_spectrum(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> all;
  for (std::size_t k = 0; k < n; ++k) all.push_back(L.basis_vector(k));
  auto D = bracket_span(L, all, all);
  if (D.size() + 1 != n || D.empty()) return std::nullopt;
  for (std::size_t a = 0; a < D.size(); ++a)
    for (std::size_t b = a + 1; b < D.size(); ++b)
      if (!is_zero(L.bracket(D[a], D[b]))) return std::nullopt;
  Subspace sd(L.field(), n);
  for (const auto& v : D) sd.add(v);
  std::size_t outside = 0;
  while (sd.contains(L.basis_vector(outside))) ++outside;
  Vector x = L.basis_vector(outside);
  Matrix basis = Matrix::from_columns(L.field(), n, D);
  Matrix li = *left_inverse(basis);
  std::vector<Vector> cols;
  for (const auto& d : D) cols.push_back(li.apply(L.bracket(x, d)));
  Polynomial p = charpoly(Matrix::from_columns(L.field(), D.size(), cols));
  std::vector<FieldElement> out;
  const auto m = static_cast<std::size_t>(p.degree());
  for (std::size_t k = 1; k <= m; ++k) out.push_back(p.coeff(m - k));
  return out;
}

std::optional<bool> spectra_equivalent(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].is_zero() != b[k].is_zero()) return false;
  if (a.empty()) return true;
  if (a[0].is_zero()) return std::nullopt;
  FieldElement c = b[0] / a[0];
  FieldElement ck = c;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(b[k] == ck * a[k])) return false;
    ck *= c;
  }
  return true;
}

std::optional<FieldElement> g1_alpha_invariant(const LieAlgebra& L) {
  auto spec = codim_one_spectrum(L);
  if (!spec || spec->size() != 3) return std::nullopt;
  const FieldTower& F = L.field();
  // t^3 + a1 t^2 + a2 t + a3
  Polynomial p(F, {(*spec)[2], (*spec)[1], (*spec)[0], F.one()});
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() < 1) return std::nullopt;
  Polynomial r = squarefree_part(g);
  if (r.degree() != 1) return std::nullopt;
  FieldElement s = -r.coeff(0);
  if (s.is_zero()) return std::nullopt;
  FieldElement e1 = -(*spec)[0];
  return e1 / s - F.from_rational(2);
}

OverFWitness overFprop_witness(const FieldTower& F, const FieldElement& a, const FieldElement& lambda) {
  const FieldTower& E = lambda.field();
  if (!E.has_level(F)) throw Error(ErrorKind::ConstraintViolated, "F must be a level of lambda's field");
  if (!(a.field() == F)) throw Error(ErrorKind::ConstraintViolated, "a must lie in F");
  const FieldElement ae = E.embed(a);
  if (ae == E.from_rational(2)) throw Error(ErrorKind::ConstraintViolated, "a = 2 forces lambda = -1");
  if (!(lambda * lambda + ae * lambda + E.one()).is_zero())
    throw Error(ErrorKind::ConstraintViolated, "lambda^2 + a lambda + 1 != 0");
  if (lambda == -E.one()) throw Error(ErrorKind::ConstraintViolated, "lambda = -1");
  auto c = E.coords_over(lambda, F);
  bool in_F = true;
  for (std::size_t s = 1; s < c.size(); ++s)
    if (!c[s].is_zero()) in_F = false;
  if (in_F) throw Error(ErrorKind::ConstraintViolated, "lambda lies in F");
  FieldElement conj = -ae - lambda;
  const FieldElement one = E.one(), two = E.from_rational(2);
  LieAlgebra y(E, 3, {{0, 1, 2, one}, {0, 2, 1, ae - two}, {0, 2, 2, two - ae}}, {"Y1", "Y2", "Y3"});
  Matrix p(E, 3, 3);
  p(0, 0) = (lambda + one).inverse();
  p(1, 1) = -(conj + one);
  p(2, 1) = one;
  p(1, 2) = -(lambda + one);
  p(2, 2) = one;
  LieAlgebra x = change_basis(y, p);
  bool ok = x.bracket_basis(0, 1) == x.basis_vector(1) && x.bracket_basis(0, 2) == scale(x.basis_vector(2), conj) &&
            is_zero(x.bracket_basis(1, 2));
  return {y, p, LieAlgebra(E, 3, x.constants(), {"X1", "X2", "X3"}), conj, ok};
}

LieAlgebra nintot_family(const FieldElement& lambda, const Automorphism& sigma, std::size_t k, std::size_t j) {
  if (k == 0 || j > k) throw Error(ErrorKind::IndexRange, "need 0 <= j <= k and k >= 1");
  std::vector<LieAlgebra> parts;
  for (std::size_t t = 0; t < j; ++t) parts.push_back(g_lambda(lambda));
  for (std::size_t t = j; t < k; ++t) parts.push_back(g_lambda(sigma.apply(lambda)));
  return parts.size() == 1 ? parts.front() : direct_sum(parts);
}

}  // namespace galoislie
