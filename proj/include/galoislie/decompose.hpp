#ifndef GALOISLIE_DECOMPOSE_HPP
#define GALOISLIE_DECOMPOSE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoislie/galois.hpp"
#include "galoislie/lie_algebra.hpp"
#include "galoislie/polynomial.hpp"

namespace galoislie {

/// Unital algebra of n x n matrices given by a basis.
class AssocAlgebra {
 public:
  /// With verify set, checks that the identity lies in the span and that
  /// products of basis elements re-expand (throws NotClosed otherwise).
  AssocAlgebra(FieldTower field, std::size_t n, std::vector<Matrix> basis, bool verify = true);

  const FieldTower& field() const { return field_; }
  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  bool contains(const Matrix& m) const;
  /// sum_k c[k] * basis[k]
  Matrix combine(const Vector& c) const;

 private:
  FieldTower field_;
  std::size_t n_;
  std::vector<Matrix> basis_;
  Subspace span_;
};

/// Linear maps phi with phi([x, y]) = [phi x, y] for all x, y.
AssocAlgebra centroid(const LieAlgebra& L);

/// Elements a with trace(a b) = 0 for every b in the algebra. Since the
/// algebra contains the identity and we are in characteristic zero this is
/// the Jacobson radical.
std::vector<Matrix> radical(const AssocAlgebra& A);

/// Minimal polynomial of a square matrix.
Polynomial matrix_minpoly(const Matrix& m);

/// A monic proper factor of p over its field, if one is found. Tries the
/// squarefree decomposition, factoring over Q, then norm-based splitting.
std::optional<Polynomial> find_proper_factor(const Polynomial& p);

/// Nontrivial idempotent (e^2 = e, e != 0, 1) of A, or nullopt when none of
/// the tried elements has a splitting minimal polynomial.
std::optional<Matrix> find_idempotent(const AssocAlgebra& A);

enum class Certificate { CertifiedIndecomposable, HeuristicIndecomposable, Unknown };
std::string to_string(Certificate c);

struct Summand {
  std::vector<Vector> basis;  // in the owner's coordinates
  LieAlgebra algebra;         // structure constants in that basis
  Certificate certificate = Certificate::Unknown;
  std::string reason;         // how the certificate was obtained
};

struct Decomposition {
  std::vector<Summand> summands;
  bool all_certified() const;
};

Decomposition decompose_indecomposable(const LieAlgebra& L);

/// Each span is an ideal, the spans are independent and their dimensions
/// add up to dim L.
bool verify_decomposition(const LieAlgebra& L, const std::vector<std::vector<Vector>>& bases);

/// Isomorphism test used by the orbit, matching and counting code. Refutes
/// through fingerprints, the projective quartic invariant (type (8,2)) and
/// the codimension-one spectrum; confirms on equal constants or when the
/// supplied matrix is a verified bijective homomorphism a -> b.
IsoVerdict iso_oracle(const LieAlgebra& a, const LieAlgebra& b, const std::optional<Matrix>& certificate = std::nullopt);

struct MatchResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  std::vector<std::pair<std::size_t, std::size_t>> pairing;  // set when Isomorphic
};

/// Isomorphic when the oracle confirms a perfect matching of summands;
/// NotIsomorphic when both decompositions are certified and no perfect
/// matching survives on the pairs the oracle does not refute.
MatchResult krull_schmidt_match(const Decomposition& a, const Decomposition& b, const IsoOracle& oracle);

struct FormWitness {
  LieAlgebra algebra;
  std::vector<std::string> parts;  // names of the conjugates summed, in order
};

struct FormCount {
  std::size_t count = 0;
  std::vector<FormWitness> witnesses;
};

/// Number of algebras h over E (up to isomorphism) whose restriction to F
/// is isomorphic to that of L, with one witness each. Throws
/// UncertifiedDecomposition when a summand is not certified indecomposable,
/// OracleUndecided when the isomorphism classes cannot be settled.
FormCount count_forms(const LieAlgebra& L, const FieldTower& F);

}  // namespace galoislie

#endif
