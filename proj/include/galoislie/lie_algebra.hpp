#ifndef GALOISLIE_LIE_ALGEBRA_HPP
#define GALOISLIE_LIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoislie/field.hpp"
#include "galoislie/linalg.hpp"

namespace galoislie {

/// One structure constant c_ij^k (0-based indices).
struct StructureConstant {
  std::size_t i, j, k;
  FieldElement value;
};

/// A finite-dimensional Lie algebra given by structure constants on a basis.
/// Only pairs i < j are stored; the Jacobi identity is checked on
/// construction.
class LieAlgebra {
 public:
  /// Entries with i > j are stored negated, repeated entries are summed.
  /// Throws IndexRange for out-of-range or i == j, JacobiFailure when the
  /// identity fails on some triple.
  LieAlgebra(FieldTower field, std::size_t dim, const std::vector<StructureConstant>& constants,
             std::vector<std::string> labels = {});

  const FieldTower& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// c_ij^k for any i, j (antisymmetric).
  FieldElement constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero constants with i < j, ordered by (i, j, k).
  std::vector<StructureConstant> constants() const;
  /// [e_i, e_j] as a sparse list for i < j.
  const SparseRow& bracket_row(std::size_t i, std::size_t j) const { return table_[pair_index(i, j)]; }

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x (columns: [x, e_j]).
  Matrix ad(const Vector& x) const;
  bool is_abelian() const;

  Vector zero_vector() const { return galoislie::zero_vector(field_, dim_); }
  Vector basis_vector(std::size_t k) const { return unit_vector(field_, dim_, k); }

  /// Same field, dimension and constants.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

  /// Linear combination of basis labels, e.g. "-X1 + (1 + i)*Z2".
  std::string format(const Vector& v) const;
  /// One line per nonzero bracket, e.g. "[X1,X5] = Z1".
  std::string bracket_table() const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }
  void check_jacobi() const;

  FieldTower field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<SparseRow> table_;  // indexed by pair_index(i, j), i < j; sorted by k
};

/// Block direct sum; brackets between the two blocks vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

/// Spans of [A, B] for subspaces given by spanning vectors.
std::vector<Vector> bracket_span(const LieAlgebra& L, const std::vector<Vector>& a, const std::vector<Vector>& b);
std::vector<Vector> center(const LieAlgebra& L);

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central;  // dims of L = L^1 ⊇ L^2 ⊇ ... until stable
  std::vector<std::size_t> derived;        // dims of L ⊇ L' ⊇ L'' ... until stable
  std::size_t center_dim = 0;
  std::size_t commutator_dim = 0;
  std::optional<std::size_t> nilpotency_class;  // nullopt when not nilpotent
  bool solvable = false;
  std::optional<std::size_t> derived_length;
  std::optional<std::pair<std::size_t, std::size_t>> two_step_type;  // (p, q) when class <= 2

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& L);
std::string to_string(const Fingerprint& f);

/// F-linear map between algebras over the same field; matrix is
/// target.dim() x source.dim(), columns are images of basis vectors.
struct LinearMap {
  Matrix matrix;
};

/// sigma-linear map: phi(sum a_i e_i) = sum sigma(a_i) M e_i.
struct SemiLinearMap {
  Automorphism sigma;
  Matrix matrix;
};

struct MorphismCheck {
  bool homomorphism = false;
  bool bijective = false;
};

MorphismCheck verify_morphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m);
/// True iff the matrix is invertible and brackets are compatible with the
/// sigma-twisted scalar action.
bool verify_sigma_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const SemiLinearMap& phi);

struct IdealCheck {
  bool is_ideal = false;
  std::vector<Vector> basis;  // echelonized
};
IdealCheck ideal_check(const LieAlgebra& L, const std::vector<Vector>& spanning);

/// Algebra in the basis given by the columns of p (old coordinates).
/// Throws SingularMatrix.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p);

/// Algebra structure on an ideal (or subalgebra) with the given independent
/// basis vectors, in that basis. Throws NotClosed when brackets leave the span.
LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<Vector>& basis);

}  // namespace galoislie

#endif
