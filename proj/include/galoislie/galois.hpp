#ifndef GALOISLIE_GALOIS_HPP
#define GALOISLIE_GALOIS_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "galoislie/field.hpp"
#include "galoislie/lie_algebra.hpp"

namespace galoislie {

struct Conjugate {
  LieAlgebra algebra;
  SemiLinearMap phi;  // (sigma, identity matrix)
};

/// The sigma-conjugate in the original basis: constants sigma(c_ij^k).
Conjugate conjugate(const LieAlgebra& L, const Automorphism& sigma);

/// Basis of the restriction: index i * d + s stands for e_s X_i, where e_s is
/// the s-th power-basis element of E over F.
struct RestrictionBookkeeping {
  FieldTower source_field;
  FieldTower target_field;
  std::size_t degree = 1;
  std::vector<std::pair<std::size_t, std::size_t>> basis;  // (s, i) per target index
};

struct Restriction {
  LieAlgebra algebra;
  RestrictionBookkeeping book;
};

/// Throws NotSubLevel when F is not a level of L's field.
Restriction restrict_scalars(const LieAlgebra& L, const FieldTower& F);

/// Same constants over a field E that has L's field as a level. Throws
/// NotSuperLevel otherwise. The basis dictionary is the identity.
LieAlgebra extend_scalars(const LieAlgebra& L, const FieldTower& E);

/// Matrix over F of phi^sigma seen between the restrictions of L and of its
/// sigma-conjugate to the fixed level of sigma.
Matrix underlying_iso_from_sigma(const LieAlgebra& L, const Automorphism& sigma);

struct EmbeddingReport {
  bool injective = false;             // F-rank of the images = dim_F of the restriction
  bool dimensions_match = false;      // that rank = dim_E of the sum of conjugates
  bool e_independent = false;         // E-rank of the images = dim_F of the restriction
  bool f_form() const { return injective && dimensions_match && e_independent; }
};

struct CanonicalEmbedding {
  GaloisGroup group;
  LieAlgebra sum_of_conjugates;  // conjugates in group order, over E
  Matrix matrix;                 // over E; column i*d+s, row block b holds sigma_b(e_s) X_i
  EmbeddingReport report;
};

/// X -> (phi^sigma(X))_sigma on the restriction of L to F. Throws NotGalois.
CanonicalEmbedding canonical_embedding(const LieAlgebra& L, const FieldTower& F);

struct SumConjugateCheck {
  Matrix matrix;
  bool verified = false;
};
/// E-linear extension of the canonical embedding, checked to be an
/// isomorphism from extend(restrict(L)) onto the sum of conjugates.
SumConjugateCheck verify_sumconjugate(const LieAlgebra& L, const FieldTower& F);

/// True iff change_basis(L, p) has all constants fixed by Gal(E, F).
/// Throws SingularMatrix.
bool defined_over_witness_check(const LieAlgebra& L, const FieldTower& F, const Matrix& p);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };
using IsoOracle = std::function<IsoVerdict(const LieAlgebra&, const LieAlgebra&)>;

/// Partition of the group indices by isomorphism class of L^sigma, classes
/// ordered by their smallest member. Throws OracleUndecided when the oracle
/// leaves some pair open.
std::vector<std::vector<std::size_t>> conjugate_orbit(const LieAlgebra& L, const GaloisGroup& group,
                                                      const IsoOracle& oracle);

}  // namespace galoislie

#endif
