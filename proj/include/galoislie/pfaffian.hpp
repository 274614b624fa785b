#ifndef GALOISLIE_PFAFFIAN_HPP
#define GALOISLIE_PFAFFIAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galoislie/field.hpp"
#include "galoislie/lie_algebra.hpp"

namespace galoislie {

/// Multivariate polynomial with exponent vectors as keys; zero coefficients
/// are never stored.
class MultiPoly {
 public:
  using Monomial = std::vector<unsigned>;

  MultiPoly(FieldTower field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}
  static MultiPoly constant(const FieldElement& c, std::size_t nvars);
  static MultiPoly variable(const FieldTower& field, std::size_t nvars, std::size_t k);

  const FieldTower& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coeff(const Monomial& m) const;
  /// Total degree when homogeneous, nullopt otherwise (and for zero).
  std::optional<unsigned> homogeneous_degree() const;

  void add_term(const Monomial& m, const FieldElement& c);
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const FieldElement& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// f(A x): variable i replaced by sum_j A(i, j) x_j.
  MultiPoly substitute_linear(const Matrix& a) const;

  /// Variables named x, y for two variables, z1..zq otherwise.
  std::string to_string() const;

 private:
  FieldTower field_;
  std::size_t nvars_;
  std::map<Monomial, FieldElement> terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Pfaffian by perfect-matching expansion; zero for odd size. Throws NotSkew.
MultiPoly pfaffian_of_matrix(const PolyMatrix& m);
FieldElement pfaffian_of_matrix(const Matrix& m);

/// Complement-first split of a class <= 2 algebra: Z is the reduced echelon
/// basis of [L,L], V the standard vectors at the non-pivot positions.
struct TwoStepSplit {
  std::size_t p = 0, q = 0;
  std::vector<Vector> V;
  std::vector<Vector> Z;
  std::vector<std::size_t> z_pivots;
};
/// Throws NotTwoStep when L is not nilpotent of class <= 2.
TwoStepSplit two_step_type(const LieAlgebra& L);

struct PfaffianForm {
  MultiPoly poly;
  TwoStepSplit split;
};
/// Pf(J(z)) with J(z)_ab = sum_k z_k * (coefficient of Z_k in [V_a, V_b]).
/// Throws OddP.
PfaffianForm pfaffian_form(const LieAlgebra& L);

/// Binary quartic a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4, formulas
/// evaluated on the plain coefficients. Not SL2-invariant in this reading.
FieldElement invariant_S(const MultiPoly& f);
FieldElement invariant_T(const MultiPoly& f);
/// S^3 / T^2 of the form; throws TVanishes.
FieldElement invariant_c(const MultiPoly& f);
/// For algebras of type (8,2); throws WrongShape otherwise.
FieldElement invariant_c(const LieAlgebra& L);

enum class CRefutation { Refuted, Inconclusive };
CRefutation refute_isomorphism_by_c(const LieAlgebra& a, const LieAlgebra& b);

/// The same two formulas with the coefficients read as a, 4b, 6c, 4d, e.
/// These are the forms that are actually SL2-invariant: under f -> f(Ax)
/// they scale by det(A)^4 and det(A)^6, so S^3/T^2 is a projective invariant.
FieldElement weighted_invariant_S(const MultiPoly& f);
FieldElement weighted_invariant_T(const MultiPoly& f);
/// nullopt when the weighted T vanishes.
std::optional<FieldElement> projective_invariant(const MultiPoly& f);
/// Refutation that is sound for arbitrary bases; used by the isomorphism oracle.
CRefutation refute_isomorphism_by_projective_invariant(const LieAlgebra& a, const LieAlgebra& b);

/// f1 == k * f2(A x). Throws SingularMatrix, ZeroScalar.
bool projective_equivalence_check(const MultiPoly& f1, const MultiPoly& f2, const Matrix& a, const FieldElement& k);

}  // namespace galoislie

#endif
