#include <random>

#include "doctest.h"
#include "galoislie/catalog.hpp"
#include "galoislie/error.hpp"
#include "galoislie/galois.hpp"
#include "galoislie/polynomial.hpp"

using namespace galoislie;

namespace {

FieldTower Q() { return FieldTower::rationals(); }

// Restricted coordinates -> E-coordinates, computed from the power basis.
Vector to_E(const LieAlgebra& L, const FieldTower& F, const Vector& x) {
  const FieldTower& E = L.field();
  const std::size_t d = E.degree_over(F);
  Vector out = L.zero_vector();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t s = 0; s < d; ++s) out[i] += E.embed(x[i * d + s]) * E.basis_over(F, s);
  return out;
}

Vector from_E(const LieAlgebra& L, const FieldTower& F, const Vector& x) {
  Vector out;
  for (const auto& c : x) {
    auto co = L.field().coords_over(c, F);
    out.insert(out.end(), co.begin(), co.end());
  }
  return out;
}

std::vector<LieAlgebra> catalog_over(const FieldTower& E, const FieldElement& param) {
  return {heisenberg(E), abelian(E, 3), g_lambda(param), r3_lambda(param), r3_lambda_plus_abelian(param),
          g1_alpha(param)};
}

}  // namespace

TEST_CASE("conjugates") {
  auto Qi = FieldTower::quadratic(-1, "i");
  auto conj = Automorphism::relative(Qi, 1);
  CHECK(conjugate(heisenberg(Qi), conj).algebra == heisenberg(Qi));
  CHECK(conjugate(g_lambda(Qi.parse("1+i")), conj).algebra == g_lambda(Qi.parse("1-i")));
  auto L = g_lambda(Qi.parse("1+i"));
  CHECK(conjugate(L, Automorphism::identity(Qi, Q())).algebra == L);
  CHECK(conjugate(r3_lambda(Qi.parse("i")), conj).algebra == r3_lambda(Qi.parse("-i")));
  CHECK(conjugate(g1_alpha(Qi.parse("1+i")), conj).algebra == g1_alpha(Qi.parse("1-i")));
  auto c = conjugate(L, conj);
  CHECK(verify_sigma_isomorphism(L, c.algebra, c.phi));
}

TEST_CASE("conjugation is functorial and additive (property)") {
  auto K = FieldTower::quadratic(2, "sqrt2");
  auto E = FieldTower::quadratic_over(K, K.from_rational(-1), "i");
  auto G = galois_group(E, Q());
  auto param = E.parse("1 + 2*i - sqrt2*i/3");
  auto algs = catalog_over(E, param);
  for (const auto& L : algs)
    for (std::size_t a = 0; a < G.order(); ++a)
      for (std::size_t b = 0; b < G.order(); ++b) {
        // (L^sigma)^tau = L^(tau o sigma)
        auto twice = conjugate(conjugate(L, G.elements[a]).algebra, G.elements[b]).algebra;
        CHECK(twice == conjugate(L, G.elements[G.table[b][a]]).algebra);
      }
  for (const auto& s : G.elements)
    CHECK(conjugate(direct_sum(algs[0], algs[2]), s).algebra ==
          direct_sum(conjugate(algs[0], s).algebra, conjugate(algs[2], s).algebra));
}

TEST_CASE("restriction of scalars") {
  auto Qi = FieldTower::quadratic(-1, "i");
  auto r = restrict_scalars(heisenberg(Qi), Q());
  CHECK(r.algebra.dim() == 6);
  CHECK(fingerprint(r.algebra).nilpotency_class == 2);
  auto K = FieldTower::quadratic(2, "sqrt2");
  CHECK(restrict_scalars(abelian(K, 1), Q()).algebra == abelian(Q(), 2));
  auto rr = fingerprint(restrict_scalars(r3_lambda(Qi.parse("i")), Q()).algebra);
  CHECK(rr.dim == 6);
  CHECK(rr.solvable);
  CHECK(rr.derived_length == 2);
  CHECK_THROWS_AS(restrict_scalars(heisenberg(Q()), Qi), Error);
}

TEST_CASE("restricted bracket agrees with the E-bracket (property)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  auto K = FieldTower::quadratic(2, "sqrt2");
  auto E = FieldTower::quadratic_over(K, K.from_rational(-1), "i");
  for (const auto& F : {Q(), K}) {
    for (const auto& L : catalog_over(E, E.parse("2 - sqrt2*i"))) {
      auto R = restrict_scalars(L, F);
      CHECK(R.algebra.dim() == E.degree_over(F) * L.dim());
      auto fl = fingerprint(L), fr = fingerprint(R.algebra);
      CHECK(fl.nilpotency_class == fr.nilpotency_class);
      CHECK(fl.solvable == fr.solvable);
      CHECK(fl.derived_length == fr.derived_length);
      for (int t = 0; t < 5; ++t) {
        Vector x, y;
        for (std::size_t k = 0; k < R.algebra.dim(); ++k) {
          std::vector<Rational> cx, cy;
          for (std::size_t u = 0; u < F.absolute_degree(); ++u) {
            cx.emplace_back(d(rng));
            cy.emplace_back(d(rng));
          }
          x.push_back(F.from_flat(cx));
          y.push_back(F.from_flat(cy));
        }
        CHECK(from_E(L, F, L.bracket(to_E(L, F, x), to_E(L, F, y))) == R.algebra.bracket(x, y));
      }
    }
  }
}

TEST_CASE("extension of scalars") {
  auto Qi = FieldTower::quadratic(-1, "i");
  CHECK(extend_scalars(heisenberg(Q()), Qi) == heisenberg(Qi));
  CHECK(extend_scalars(abelian(Q(), 2), Qi) == abelian(Qi, 2));
  CHECK(extend_scalars(g_lambda(Q().from_rational(3)), Qi) == g_lambda(Qi.from_rational(3)));
  CHECK_THROWS_AS(extend_scalars(heisenberg(Qi), Q()), Error);
}

TEST_CASE("underlying isomorphisms from sigma") {
  auto Qi = FieldTower::quadratic(-1, "i");
  auto K = FieldTower::quadratic(2, "sqrt2");
  for (const auto& [E, p] : {std::pair{Qi, Qi.parse("1+i")}, std::pair{K, K.parse("1+sqrt2")}}) {
    auto G = galois_group(E, Q());
    for (const auto& L : catalog_over(E, p))
      for (const auto& s : G.elements) {
        auto m = underlying_iso_from_sigma(L, s);
        auto src = restrict_scalars(L, Q()).algebra;
        auto dst = restrict_scalars(conjugate(L, s).algebra, Q()).algebra;
        auto mc = verify_morphism(src, dst, m);
        CHECK(mc.homomorphism);
        CHECK(mc.bijective);
        if (s.is_identity()) CHECK(m == Matrix::identity(Q(), src.dim()));
      }
  }
}

TEST_CASE("canonical embedding and sum of conjugates") {
  auto Qi = FieldTower::quadratic(-1, "i");
  auto K = FieldTower::quadratic(2, "sqrt2");
  std::vector<LieAlgebra> cases{heisenberg(Qi), heisenberg(K), r3_lambda(Qi.parse("i")), g_lambda(Qi.parse("1+i")),
                                abelian(K, 3)};
  for (const auto& L : cases) {
    auto ce = canonical_embedding(L, Q());
    CHECK(ce.report.f_form());
    CHECK(verify_sumconjugate(L, Q()).verified);
  }
  auto ce = canonical_embedding(g_lambda(Qi.parse("1+i")), Q());
  CHECK(ce.sum_of_conjugates == direct_sum(g_lambda(Qi.parse("1+i")), g_lambda(Qi.parse("1-i"))));
  auto c3 = FieldTower::extend(Q(), Polynomial::from_rationals(Q(), {Rational(-2), 0, 0, 1}), "c");
  CHECK_THROWS_AS(canonical_embedding(heisenberg(c3), Q()), Error);
}

TEST_CASE("defined-over witnesses") {
  auto Qi = FieldTower::quadratic(-1, "i");
  CHECK(defined_over_witness_check(heisenberg(Qi), Q(), Matrix::identity(Qi, 3)));
  CHECK_FALSE(defined_over_witness_check(g_lambda(Qi.parse("1+i")), Q(), Matrix::identity(Qi, 10)));
  CHECK_THROWS_AS(defined_over_witness_check(heisenberg(Qi), Q(), Matrix(Qi, 3, 3)), Error);
}

TEST_CASE("overFprop witness") {
  auto Qi = FieldTower::quadratic(-1, "i");
  auto w = overFprop_witness(Q(), Q().zero(), Qi.parse("i"));
  CHECK(w.verified);
  CHECK(w.conj_lambda == Qi.parse("-i"));
  CHECK(w.x_algebra == r3_lambda(Qi.parse("-i")));
  CHECK(defined_over_witness_check(w.x_algebra, Q(), *inverse(w.x_in_y)));
  // lambda = -i produces r_{3,i}
  auto w2 = overFprop_witness(Q(), Q().zero(), Qi.parse("-i"));
  CHECK(w2.x_algebra == r3_lambda(Qi.parse("i")));
  CHECK(defined_over_witness_check(r3_lambda(Qi.parse("i")), Q(), *inverse(w2.x_in_y)));
  auto Z6 = FieldTower::cyclotomic(6, "zeta6");
  auto w3 = overFprop_witness(Q(), Q().from_rational(-1), Z6.generator());
  CHECK(w3.verified);
  CHECK_THROWS_AS(overFprop_witness(Q(), Q().from_rational(2), Qi.parse("i")), Error);
  CHECK_THROWS_AS(overFprop_witness(Q(), Q().from_rational(1), Qi.parse("i")), Error);
}

TEST_CASE("catalog odds and ends") {
  auto Qi = FieldTower::quadratic(-1, "i");
  CHECK(r3_iso_criterion(Q().from_rational(2), Q().from_rational(Rational(1, 2))));
  CHECK(r3_iso_criterion(Qi.parse("i"), Qi.parse("-i")));
  CHECK_FALSE(r3_iso_criterion(Q().from_rational(2), Q().from_rational(3)));
  CHECK_THROWS_AS(r3_lambda(Q().zero()), Error);
  CHECK_THROWS_AS(g1_alpha(Q().zero()), Error);
  CHECK(g1_alpha_invariant(g1_alpha(Qi.parse("1+i"))) == Qi.parse("1+i"));
  CHECK(g1_alpha_invariant(g1_alpha(Q().one())) == Q().one());
  auto conj = Automorphism::relative(Qi, 1);
  auto a = codim_one_spectrum(g1_alpha(Qi.parse("1+i")));
  auto b = codim_one_spectrum(conjugate(g1_alpha(Qi.parse("1+i")), conj).algebra);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(spectra_equivalent(*a, *b) == false);
  auto r = codim_one_spectrum(r3_lambda(Qi.parse("i")));
  auto rbar = codim_one_spectrum(r3_lambda(Qi.parse("-i")));
  CHECK(spectra_equivalent(*r, *rbar) == true);
  auto n = nintot_family(Qi.parse("1+i"), conj, 2, 1);
  CHECK(n == direct_sum(g_lambda(Qi.parse("1+i")), g_lambda(Qi.parse("1-i"))));
  CHECK(nintot_family(Qi.parse("1+i"), conj, 1, 0) == g_lambda(Qi.parse("1-i")));
  CHECK_THROWS_AS(nintot_family(Qi.parse("1+i"), conj, 0, 0), Error);
}
