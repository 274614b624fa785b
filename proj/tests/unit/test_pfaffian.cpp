#include <random>

#include "doctest.h"
#include "galoislie/catalog.hpp"
#include "galoislie/error.hpp"
#include "galoislie/galois.hpp"
#include "galoislie/pfaffian.hpp"

using namespace galoislie;

namespace {

FieldTower Q() { return FieldTower::rationals(); }
FieldTower Qi() {
  static FieldTower f = FieldTower::quadratic(-1, "i");
  return f;
}

MultiPoly quartic(const std::vector<FieldElement>& c) {
  MultiPoly f(c[0].field(), 2);
  for (unsigned k = 0; k < 5; ++k) f.add_term({4 - k, k}, c[k]);
  return f;
}

FieldElement random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Qi().from_flat({Rational(d(rng), den(rng)), Rational(d(rng), den(rng))});
}

Matrix random_sl2(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  const auto& F = Qi();
  Matrix a = Matrix::identity(F, 2);
  for (int t = 0; t < 4; ++t) {
    Matrix u = Matrix::identity(F, 2);
    if (t % 2 == 0)
      u(0, 1) = F.from_rational(d(rng));
    else
      u(1, 0) = F.from_rational(d(rng));
    a = a * u;
  }
  return a;
}

}  // namespace

TEST_CASE("small pfaffians") {
  const auto& F = Q();
  auto v = [&](std::size_t k) { return MultiPoly::variable(F, 6, k); };
  MultiPoly zero(F, 6);
  PolyMatrix m2{{zero, v(0)}, {-v(0), zero}};
  CHECK(pfaffian_of_matrix(m2) == v(0));
  // upper entries (a,b,c,d,e,f) = (01,02,03,12,13,23)
  PolyMatrix m4(4, std::vector<MultiPoly>(4, zero));
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      m4[i][j] = v(k);
      m4[j][i] = -v(k);
      ++k;
    }
  CHECK(pfaffian_of_matrix(m4) == v(0) * v(5) - v(1) * v(4) + v(2) * v(3));
  PolyMatrix m3(3, std::vector<MultiPoly>(3, zero));
  m3[0][1] = v(0);
  m3[1][0] = -v(0);
  CHECK(pfaffian_of_matrix(m3).is_zero());
  m4[0][1] = v(1);
  CHECK_THROWS_AS(pfaffian_of_matrix(m4), Error);
}

TEST_CASE("Pf^2 = det on random skew matrices (property)") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(size(rng));
    const auto& F = t % 2 ? Qi() : Q();
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Rational> c(F.absolute_degree(), Rational(0));
        for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) + 6) % 4);
        m(i, j) = F.from_flat(c);
        m(j, i) = -m(i, j);
      }
    auto pf = pfaffian_of_matrix(m);
    CHECK(pf * pf == determinant(m));
  }
}

TEST_CASE("two-step types") {
  auto h = heisenberg(Q());
  auto s = two_step_type(h);
  CHECK(s.p == 2);
  CHECK(s.q == 1);
  auto g = two_step_type(g_lambda(Qi().parse("1+i")));
  CHECK(g.p == 8);
  CHECK(g.q == 2);
  auto hh = two_step_type(direct_sum(h, h));
  CHECK(hh.p == 4);
  CHECK(hh.q == 2);
  CHECK_THROWS_AS(two_step_type(r3_lambda(Q().one())), Error);
}

TEST_CASE("pfaffian forms of g_lambda") {
  for (const char* lam : {"0", "1", "1+i", "i", "-3/4+2i"}) {
    auto lambda = Qi().parse(lam);
    auto f = pfaffian_form(g_lambda(lambda)).poly;
    auto expected = quartic({Qi().one(), Qi().zero(), lambda, Qi().zero(), Qi().one()});
    CHECK(f == expected);
  }
  CHECK(pfaffian_form(g_lambda(Qi().parse("1+i"))).poly.to_string() == "x^4 + (1 + i)*x^2*y^2 + y^4");
}

TEST_CASE("pfaffian form matches the block determinant oracle") {
  // f(x, y) = det B with B_ab = J(x,y)_{a, 4+b}
  std::mt19937 rng(3);
  auto L = g_lambda(Qi().parse("2-5i"));
  auto pf = pfaffian_form(L);
  for (int t = 0; t < 10; ++t) {
    auto x = random_gaussian(rng), y = random_gaussian(rng);
    Matrix B(Qi(), 4, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        auto w = L.bracket(pf.split.V[a], pf.split.V[4 + b]);
        B(a, b) = x * w[pf.split.z_pivots[0]] + y * w[pf.split.z_pivots[1]];
      }
    FieldElement val = Qi().zero();
    for (const auto& [m, c] : pf.poly.terms()) val += c * x.pow(m[0]) * y.pow(m[1]);
    CHECK(val == determinant(B));
  }
}

TEST_CASE("pfaffian form of h3 + h3 and abelian") {
  auto hh = direct_sum(heisenberg(Q()), heisenberg(Q()));
  auto f = pfaffian_form(hh).poly;
  auto z = [&](std::size_t k) { return MultiPoly::variable(Q(), 2, k); };
  CHECK(f == z(0) * z(1));
  // complement with zero brackets: Heisenberg plus two central directions
  LieAlgebra L(Q(), 5, {{2, 3, 4, Q().one()}});
  auto s = two_step_type(L);
  CHECK(s.p == 4);
  CHECK(pfaffian_form(L).poly.is_zero());
  CHECK_THROWS_AS(pfaffian_form(direct_sum(heisenberg(Q()), abelian(Q(), 1))), Error);
}

TEST_CASE("S and T") {
  auto f0 = quartic({Q().one(), Q().zero(), Q().zero(), Q().zero(), Q().one()});
  CHECK(invariant_S(f0) == Q().one());
  CHECK(invariant_T(f0).is_zero());
  auto x4 = quartic({Q().one(), Q().zero(), Q().zero(), Q().zero(), Q().zero()});
  CHECK(invariant_S(x4).is_zero());
  CHECK(invariant_T(x4).is_zero());
  CHECK_THROWS_AS(invariant_S(MultiPoly::variable(Q(), 2, 0)), Error);
}

TEST_CASE("c invariant values") {
  CHECK(invariant_c(g_lambda(Qi().parse("i"))) == Qi().from_rational(2));
  CHECK(invariant_c(g_lambda(Qi().parse("-i"))) == Qi().from_rational(2));
  auto lambda = Qi().parse("1+i");
  // oracle: numerator and denominator separately
  auto num = (Rational(3) * lambda * lambda + Qi().one()).pow(3);
  auto den = (lambda - lambda.pow(3)).pow(2);
  auto c = invariant_c(g_lambda(lambda));
  CHECK(c == num / den);
  CHECK(c == Qi().parse("332/100 - 2226/100*i"));
  CHECK(c.to_string() == "83/25 - 1113/50*i");
  try {
    invariant_c(g_lambda(Qi().one()));
    FAIL("expected TVanishes");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TVanishes);
  }
}

TEST_CASE("c refutation") {
  CHECK(refute_isomorphism_by_c(g_lambda(Qi().parse("1+i")), g_lambda(Qi().parse("1-i"))) == CRefutation::Refuted);
  CHECK(refute_isomorphism_by_c(g_lambda(Qi().parse("i")), g_lambda(Qi().parse("-i"))) == CRefutation::Inconclusive);
  auto L = g_lambda(Qi().parse("2+i"));
  CHECK(refute_isomorphism_by_c(L, L) == CRefutation::Inconclusive);
}

TEST_CASE("projective equivalence") {
  auto lambda = Qi().parse("1+i");
  auto f = pfaffian_form(g_lambda(lambda)).poly;
  auto I = Matrix::identity(Qi(), 2);
  CHECK(projective_equivalence_check(f, f, I, Qi().one()));
  Matrix swap(Qi(), 2, 2);
  swap(0, 1) = swap(1, 0) = Qi().one();
  CHECK(projective_equivalence_check(f, f, swap, Qi().one()));
  auto f0 = pfaffian_form(g_lambda(Qi().zero())).poly;
  CHECK_FALSE(projective_equivalence_check(f0, f, I, Qi().one()));
  CHECK_FALSE(projective_equivalence_check(f0, f, I, Qi().from_rational(3)));
  CHECK_THROWS_AS(projective_equivalence_check(f, f, Matrix(Qi(), 2, 2), Qi().one()), Error);
  CHECK_THROWS_AS(projective_equivalence_check(f, f, I, Qi().zero()), Error);
}

TEST_CASE("plain-coefficient S is not SL2-invariant") {
  auto x4 = quartic({Q().one(), Q().zero(), Q().zero(), Q().zero(), Q().zero()});
  Matrix A = Matrix::identity(Q(), 2);
  A(0, 1) = Q().one();
  auto g = x4.substitute_linear(A);  // (x + y)^4
  CHECK(invariant_S(x4).is_zero());
  CHECK(invariant_S(g) == Q().from_rational(45));
  CHECK(weighted_invariant_S(g).is_zero());
  CHECK(weighted_invariant_T(g).is_zero());
}

TEST_CASE("weighted S, T under SL2, scaling of S and T (property)") {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    std::vector<FieldElement> c;
    for (int k = 0; k < 5; ++k) c.push_back(random_gaussian(rng));
    auto f = quartic(c);
    auto A = random_sl2(rng);
    auto g = f.substitute_linear(A);
    CHECK(weighted_invariant_S(g) == weighted_invariant_S(f));
    CHECK(weighted_invariant_T(g) == weighted_invariant_T(f));
    auto k = random_gaussian(rng);
    if (k.is_zero()) k = Qi().one();
    CHECK(invariant_S(k * f) == k * k * invariant_S(f));
    CHECK(invariant_T(k * f) == k * k * k * invariant_T(f));
    CHECK(weighted_invariant_S(k * f) == k * k * weighted_invariant_S(f));
    CHECK(weighted_invariant_T(k * f) == k * k * k * weighted_invariant_T(f));
    auto pf = projective_invariant(f);
    if (pf) CHECK(*projective_invariant(k * g) == *pf);
  }
}

TEST_CASE("plain S, T stay fixed on the diagonal torus and the swap") {
  // the substitutions that keep b = d = 0 and have det 1
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto lambda = random_gaussian(rng);
    auto f = pfaffian_form(g_lambda(lambda)).poly;
    Matrix A(Qi(), 2, 2);
    A(0, 1) = Qi().one();
    A(1, 0) = -Qi().one();
    auto g = f.substitute_linear(A);
    CHECK(invariant_S(g) == invariant_S(f));
    CHECK(invariant_T(g) == invariant_T(f));
  }
}

TEST_CASE("projective invariant separates g_{1+i} from its conjugate") {
  auto a = g_lambda(Qi().parse("1+i")), b = g_lambda(Qi().parse("1-i"));
  CHECK(refute_isomorphism_by_projective_invariant(a, b) == CRefutation::Refuted);
  CHECK(refute_isomorphism_by_projective_invariant(g_lambda(Qi().parse("i")), g_lambda(Qi().parse("-i"))) ==
        CRefutation::Inconclusive);
  // 27 (12 + l^2)^3 / (l^2 (36 - l^2)^2)
  auto l = Qi().parse("1+i");
  auto l2 = l * l;
  auto oracle = Rational(27) * (l2 + Qi().from_rational(12)).pow(3) / (l2 * (Qi().from_rational(36) - l2).pow(2));
  CHECK(*projective_invariant(pfaffian_form(a).poly) == oracle);
  // basis change mixing X and Z directions leaves it unchanged
  Matrix P = Matrix::identity(Qi(), 10);
  P(0, 1) = Qi().parse("2+i");
  P(8, 3) = Qi().one();
  P(4, 7) = Qi().parse("-1/2");
  auto changed = change_basis(a, P);
  CHECK(refute_isomorphism_by_projective_invariant(a, changed) == CRefutation::Inconclusive);
}

TEST_CASE("S and T of f_lambda symbolically (20 random lambdas)") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 20; ++t) {
    FieldElement lambda = t % 2 ? random_gaussian(rng) : Qi().from_rational(Rational(d(rng), 1 + (d(rng) + 20) % 7));
    auto f = pfaffian_form(g_lambda(lambda)).poly;
    CHECK(invariant_S(f) == Rational(3) * lambda * lambda + Qi().one());
    CHECK(invariant_T(f) == lambda - lambda.pow(3));
  }
}

TEST_CASE("c is conjugation equivariant (property)") {
  std::mt19937 rng(41);
  auto conj = Automorphism::relative(Qi(), 1);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    auto lambda = random_gaussian(rng);
    if ((lambda - lambda.pow(3)).is_zero()) continue;
    auto L = g_lambda(lambda);
    CHECK(invariant_c(conjugate(L, conj).algebra) == conj.apply(invariant_c(L)));
    ++checked;
  }
  CHECK(checked > 20);
}
