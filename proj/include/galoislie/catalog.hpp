#ifndef GALOISLIE_CATALOG_HPP
#define GALOISLIE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "galoislie/field.hpp"
#include "galoislie/lie_algebra.hpp"

namespace galoislie {

/// [X,Y] = Z
LieAlgebra heisenberg(const FieldTower& field);
LieAlgebra abelian(const FieldTower& field, std::size_t n);

/// Basis X1..X8, Z1, Z2 with
///   [X1,X5] = [X2,X6] = [X3,X7] = [X4,X8] = Z1,
///   [X2,X5] = [X3,X6] = [X4,X7] = Z2, [X1,X8] = -Z2, [X2,X7] = -lambda Z2.
LieAlgebra g_lambda(const FieldElement& lambda);

/// [X1,X2] = X2, [X1,X3] = lambda X3. Throws ZeroLambda.
LieAlgebra r3_lambda(const FieldElement& lambda);
/// r3_lambda plus a central X4.
LieAlgebra r3_lambda_plus_abelian(const FieldElement& lambda);
/// r3_lambda and r3_mu are isomorphic iff lambda = mu or lambda * mu = 1.
bool r3_iso_criterion(const FieldElement& lambda, const FieldElement& mu);

/// [X1,X2] = X2, [X1,X3] = X3, [X1,X4] = alpha X4. Throws ZeroAlpha.
LieAlgebra g1_alpha(const FieldElement& alpha);

/// For an algebra whose derived algebra D is abelian of codimension one:
/// the characteristic polynomial coefficients a_1..a_m of ad_x on D for a
/// fixed x outside D (monic, a_k the coefficient of t^(m-k)). Scaling x by c
/// scales a_k by c^k, so the list is an isomorphism invariant up to that
/// weighting. nullopt when the shape does not apply.
std::optional<std::vector<FieldElement>> codim_one_spectrum(const LieAlgebra& L);
/// True when some c != 0 in the field has b_k = c^k a_k for all k, false when
/// no such c exists, nullopt when the test cannot decide (a_1 = 0).
std::optional<bool> spectra_equivalent(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);
/// alpha recovered from g1_alpha(alpha) up to isomorphism: the characteristic
/// polynomial of ad_x on D has a repeated root s and alpha = e1/s - 2.
std::optional<FieldElement> g1_alpha_invariant(const LieAlgebra& L);

struct OverFWitness {
  LieAlgebra y_algebra;  // [Y1,Y2] = Y3, [Y1,Y3] = (a-2)Y2 + (2-a)Y3
  Matrix x_in_y;         // columns X1, X2, X3 in Y coordinates
  LieAlgebra x_algebra;  // change_basis(y_algebra, x_in_y)
  FieldElement conj_lambda;  // the other root of t^2 + a t + 1
  bool verified = false;     // [X1,X2] = X2, [X1,X3] = conj_lambda X3, [X2,X3] = 0
};

/// lambda in a field E containing F with lambda^2 + a lambda + 1 = 0, a in F,
/// lambda not in F, a != 2, lambda != -1. Throws ConstraintViolated.
OverFWitness overFprop_witness(const FieldTower& F, const FieldElement& a, const FieldElement& lambda);

/// j copies of g_lambda followed by k - j copies of g_{sigma(lambda)}.
/// Throws IndexRange unless 0 <= j <= k and k >= 1.
LieAlgebra nintot_family(const FieldElement& lambda, const Automorphism& sigma, std::size_t k, std::size_t j);

}  // namespace galoislie

#endif
