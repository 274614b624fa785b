#include <random>

#include "doctest.h"
#include "galoislie/catalog.hpp"
#include "galoislie/error.hpp"
#include "galoislie/lie_algebra.hpp"

using namespace galoislie;

namespace {

Vector random_vector(const LieAlgebra& L, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vector v;
  for (std::size_t k = 0; k < L.dim(); ++k) {
    std::vector<Rational> c;
    for (std::size_t t = 0; t < L.field().absolute_degree(); ++t) c.emplace_back(d(rng));
    v.push_back(L.field().from_flat(c));
  }
  return v;
}

FieldTower Q() { return FieldTower::rationals(); }

}  // namespace

TEST_CASE("heisenberg brackets") {
  auto h = heisenberg(Q());
  auto X = h.basis_vector(0), Y = h.basis_vector(1), Z = h.basis_vector(2);
  CHECK(h.bracket(X, Y) == Z);
  CHECK(h.bracket(Y, X) == scale(Z, Q().from_rational(-1)));
  CHECK(is_zero(h.bracket(X, X)));
  // [X+Y, X-Y] = -[X,Y] + [Y,X] = -2Z
  CHECK(h.bracket(add(X, Y), sub(X, Y)) == scale(Z, Q().from_rational(-2)));
  CHECK(h.bracket_table() == "[X,Y] = Z\n");
}

TEST_CASE("jacobi rejection reports the triple") {
  auto F = Q();
  auto one = F.one();
  std::vector<StructureConstant> cs{{0, 1, 0, one}, {1, 2, 1, one}, {2, 0, 2, one}};
  try {
    LieAlgebra L(F, 3, cs, {"X1", "X2", "X3"});
    FAIL("expected JacobiFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::JacobiFailure);
    CHECK(std::string(e.what()).find("(X1,X2,X3)") != std::string::npos);
    // hand expansion gives -X1 - X2 - X3
    CHECK(std::string(e.what()).find("sum = -X1 - X2 - X3") != std::string::npos);
  }
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(LieAlgebra(Q(), 2, {{0, 0, 1, Q().one()}}), Error);
  CHECK_THROWS_AS(LieAlgebra(Q(), 2, {{0, 2, 1, Q().one()}}), Error);
  LieAlgebra flipped(Q(), 3, {{1, 0, 2, Q().one()}});
  CHECK(flipped.constant(0, 1, 2) == -Q().one());
}

TEST_CASE("fingerprints") {
  auto f = fingerprint(heisenberg(Q()));
  CHECK(f.nilpotency_class == 1 + 1);
  CHECK(f.center_dim == 1);
  CHECK(f.two_step_type == std::make_pair<std::size_t, std::size_t>(2, 1));
  auto a = fingerprint(abelian(Q(), 3));
  CHECK(a.nilpotency_class == 1);
  CHECK(a.center_dim == 3);
  auto Qi = FieldTower::quadratic(-1, "i");
  auto g = fingerprint(g_lambda(Qi.parse("1+i")));
  CHECK(g.nilpotency_class == 2);
  CHECK(g.two_step_type == std::make_pair<std::size_t, std::size_t>(8, 2));
  auto hh = direct_sum(heisenberg(Q()), heisenberg(Q()));
  CHECK(hh.dim() == 6);
  CHECK(fingerprint(hh).nilpotency_class == 2);
  CHECK(direct_sum(abelian(Q(), 1), abelian(Q(), 1)) == abelian(Q(), 2));
  auto ga = direct_sum(g_lambda(Qi.parse("1+i")), abelian(Qi, 1));
  CHECK(ga.dim() == 11);
  CHECK(fingerprint(ga).commutator_dim == 2);
  auto r = fingerprint(r3_lambda(Q().from_rational(2)));
  CHECK(r.solvable);
  CHECK_FALSE(r.nilpotency_class);
  CHECK(r.derived_length == 2);
}

TEST_CASE("fingerprint of a direct sum adds series dims (property)") {
  auto Qi = FieldTower::quadratic(-1, "i");
  std::vector<LieAlgebra> algs{heisenberg(Qi), abelian(Qi, 2), g_lambda(Qi.parse("1+i")), r3_lambda(Qi.parse("i")),
                               g1_alpha(Qi.parse("2"))};
  for (const auto& A : algs)
    for (const auto& B : algs) {
      auto fa = fingerprint(A), fb = fingerprint(B), fs = fingerprint(direct_sum(A, B));
      auto at = [](const std::vector<std::size_t>& v, std::size_t k) { return k < v.size() ? v[k] : v.back(); };
      for (std::size_t k = 0; k < fs.lower_central.size(); ++k)
        CHECK(fs.lower_central[k] == at(fa.lower_central, k) + at(fb.lower_central, k));
      for (std::size_t k = 0; k < fs.derived.size(); ++k)
        CHECK(fs.derived[k] == at(fa.derived, k) + at(fb.derived, k));
      CHECK(fs.center_dim == fa.center_dim + fb.center_dim);
    }
}

TEST_CASE("morphism checks") {
  auto h = heisenberg(Q());
  auto id = verify_morphism(h, h, Matrix::identity(Q(), 3));
  CHECK(id.homomorphism);
  CHECK(id.bijective);
  auto zero = verify_morphism(h, h, Matrix(Q(), 3, 3));
  CHECK(zero.homomorphism);
  CHECK_FALSE(zero.bijective);
  Matrix swap(Q(), 3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = Q().one();
  CHECK_FALSE(verify_morphism(h, h, swap).homomorphism);
}

TEST_CASE("sigma isomorphisms") {
  auto Qi = FieldTower::quadratic(-1, "i");
  auto conj = Automorphism::relative(Qi, 1);
  auto I = Matrix::identity(Qi, 3);
  CHECK(verify_sigma_isomorphism(heisenberg(Qi), heisenberg(Qi), {Automorphism::identity(Qi, Q()), I}));
  CHECK(verify_sigma_isomorphism(heisenberg(Qi), heisenberg(Qi), {conj, I}));
  auto g = g_lambda(Qi.parse("1+i")), gbar = g_lambda(Qi.parse("1-i"));
  auto I10 = Matrix::identity(Qi, 10);
  CHECK_FALSE(verify_sigma_isomorphism(g, g, {conj, I10}));
  CHECK(verify_sigma_isomorphism(g, gbar, {conj, I10}));
}

TEST_CASE("ideal checks") {
  auto F = Q();
  auto h = heisenberg(F);
  CHECK(ideal_check(h, {h.basis_vector(2)}).is_ideal);
  CHECK_FALSE(ideal_check(h, {h.basis_vector(0)}).is_ideal);
  auto hh = direct_sum(h, h);
  auto e = [&](std::size_t k) { return hh.basis_vector(k); };
  // X1, Y1 + Z2, Z1
  CHECK(ideal_check(hh, {e(0), add(e(1), e(5)), e(2)}).is_ideal);
}

TEST_CASE("bilinearity and derived/center ideals (property)") {
  std::mt19937 rng(11);
  auto Qi = FieldTower::quadratic(-1, "i");
  std::vector<LieAlgebra> algs{heisenberg(Qi), g_lambda(Qi.parse("1+i")), r3_lambda(Qi.parse("i")),
                               g1_alpha(Qi.parse("3"))};
  for (const auto& L : algs) {
    for (int t = 0; t < 25; ++t) {
      auto x = random_vector(L, rng), y = random_vector(L, rng), z = random_vector(L, rng);
      auto a = Qi.parse("2-i"), b = Qi.parse("1/3");
      CHECK(L.bracket(add(scale(x, a), scale(y, b)), z) ==
            add(scale(L.bracket(x, z), a), scale(L.bracket(y, z), b)));
      CHECK(L.bracket(x, y) == scale(L.bracket(y, x), -Qi.one()));
    }
    std::vector<Vector> all;
    for (std::size_t k = 0; k < L.dim(); ++k) all.push_back(L.basis_vector(k));
    CHECK(ideal_check(L, bracket_span(L, all, all)).is_ideal);
    CHECK(ideal_check(L, center(L)).is_ideal);
    CHECK(verify_morphism(L, L, Matrix::identity(Qi, L.dim())).homomorphism);
  }
}

TEST_CASE("change of basis and subalgebras") {
  auto F = Q();
  auto h = heisenberg(F);
  Matrix p = Matrix::identity(F, 3);
  p(0, 1) = F.one();  // new Y = X + Y
  auto h2 = change_basis(h, p);
  CHECK(h2.constant(0, 1, 2) == F.one());
  CHECK_THROWS_AS(change_basis(h, Matrix(F, 3, 3)), Error);
  auto hh = direct_sum(h, h);
  auto sub = subalgebra(hh, {hh.basis_vector(0), add(hh.basis_vector(1), hh.basis_vector(5)), hh.basis_vector(2)});
  CHECK(sub == heisenberg(F));
}
