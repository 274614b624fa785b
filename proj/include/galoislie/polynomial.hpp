#ifndef GALOISLIE_POLYNOMIAL_HPP
#define GALOISLIE_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoislie/field.hpp"

namespace galoislie {

/// Univariate polynomial over one level of a FieldTower, coefficients low to
/// high with no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(FieldTower field) : field_(std::move(field)) {}
  Polynomial(FieldTower field, std::vector<FieldElement> coeffs);
  static Polynomial from_rationals(const FieldTower& field, const std::vector<Rational>& coeffs);
  static Polynomial monomial(const FieldElement& c, std::size_t degree);
  /// t - a
  static Polynomial linear(const FieldElement& a);

  const FieldTower& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  FieldElement coeff(std::size_t k) const;
  FieldElement leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool has_rational_coeffs() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const FieldElement& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial pow(std::size_t exponent) const;

  /// Evaluates at a point of this level or of any level above it.
  FieldElement eval(const FieldElement& x) const;
  /// Image under a field automorphism applied to every coefficient.
  Polynomial map_coeffs(const Automorphism& sigma) const;
  /// Reinterprets the coefficients in a tower that contains this level.
  Polynomial embed_into(const FieldTower& upper) const;

  /// e.g. "t^2 + 1"; coefficients wrapped in parentheses when compound.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldTower field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
  Polynomial g, u, v;
};
ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b);

Polynomial squarefree_part(const Polynomial& p);
/// Yun decomposition: p = lc * prod_i factors[i]^(i+1), factors pairwise coprime.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// All rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const Polynomial& p);

/// A monic irreducible factor over Q together with its multiplicity.
struct Factor {
  Polynomial poly;
  std::size_t multiplicity;
};

/// Factorization over Q into monic irreducibles (sorted by degree, then
/// coefficients). Degree is limited to 12; throws DegreeTooLarge beyond.
std::vector<Factor> factor_over_Q(const Polynomial& p);

namespace detail {
/// Same as factor_over_Q with a caller-chosen degree bound.
std::vector<Factor> factor_over_Q_bounded(const Polynomial& p, std::size_t max_degree);
}  // namespace detail

bool is_irreducible_over_Q(const Polynomial& p);

/// Nth cyclotomic polynomial over Q.
Polynomial cyclotomic_polynomial(int n);

}  // namespace galoislie

#endif
