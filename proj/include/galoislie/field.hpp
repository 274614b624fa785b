#ifndef GALOISLIE_FIELD_HPP
#define GALOISLIE_FIELD_HPP

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galoislie/rational.hpp"

namespace galoislie {

class FieldElement;
class Polynomial;

namespace detail {

// One level of a tower. Elements are stored as flat rational coordinates in
// the product power basis: index = j * base_abs_degree + base_index, where j
// is the exponent of this level's generator.
struct Level {
  std::shared_ptr<const Level> base;
  std::size_t depth = 0;
  std::size_t rel_degree = 1;
  std::size_t abs_degree = 1;
  std::string generator;
  std::vector<std::vector<Rational>> minpoly;      // monic, rel_degree + 1 coefficients over base
  std::vector<std::vector<Rational>> auto_images;  // generator images, flat coords in this level
  std::vector<std::string> auto_names;
  std::vector<std::vector<std::size_t>> closure;   // closure[a][b] = index of (a o b)
  bool galois = false;
  bool irreducibility_verified = false;
};

}  // namespace detail

/// A number field presented as a tower of simple extensions over Q. Each
/// level carries its minimal polynomial and an explicit list of relative
/// automorphisms given by the images of its generator.
///
/// Handles are cheap to copy; two handles compare equal only when they refer
/// to the same constructed level.
class FieldTower {
 public:
  /// The shared rational level every tower is built on.
  static FieldTower rationals();

  /// Adjoins a root of `minpoly` (monic over `base`, degree >= 2). Each entry of
  /// `auto_images` is a root of `minpoly` in the new field; the identity image
  /// is added when missing. The list must be closed under composition.
  static FieldTower extend(const FieldTower& base, const Polynomial& minpoly, std::string generator,
                           const std::vector<std::vector<FieldElement>>& auto_image_coords = {},
                           std::vector<std::string> auto_names = {});

  /// Q(sqrt d) for a non-square integer d, generator squaring to d; the
  /// non-trivial automorphism is named "conj".
  static FieldTower quadratic(long d, std::string generator);
  static FieldTower quadratic_over(const FieldTower& base, const FieldElement& d, std::string generator);
  /// Q(zeta_n) for 3 <= n <= 12 with automorphisms zeta -> zeta^k named "k<k>".
  static FieldTower cyclotomic(int n, std::string generator);

  bool is_rationals() const { return level_->depth == 0; }
  std::size_t depth() const { return level_->depth; }
  std::size_t degree() const { return level_->rel_degree; }
  std::size_t absolute_degree() const { return level_->abs_degree; }
  FieldTower base() const;
  /// The level at the given depth (0 = Q).
  FieldTower level(std::size_t depth) const;
  bool has_level(const FieldTower& sub) const;
  /// [this : sub]; throws NotSubLevel when `sub` is not a level of this tower.
  std::size_t degree_over(const FieldTower& sub) const;

  const std::string& generator_name() const { return level_->generator; }
  std::vector<std::string> generator_names() const;  // bottom to top
  Polynomial minpoly() const;
  bool is_galois() const { return level_->galois; }
  bool irreducibility_verified() const { return level_->irreducibility_verified; }

  std::size_t automorphism_count() const { return level_->auto_images.size(); }
  FieldElement automorphism_image(std::size_t k) const;
  const std::string& automorphism_name(std::size_t k) const { return level_->auto_names.at(k); }
  std::size_t compose_index(std::size_t a, std::size_t b) const { return level_->closure.at(a).at(b); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& r) const;
  FieldElement from_flat(std::vector<Rational> coords) const;
  /// Element sum_j coords[j] * theta^j with coordinates in the base level.
  FieldElement from_coords(std::span<const FieldElement> coords) const;
  /// Embeds an element of a lower level of this tower.
  FieldElement embed(const FieldElement& x) const;
  /// Coordinates of x over the sub level `sub` ([this:sub] elements of sub).
  std::vector<FieldElement> coords_over(const FieldElement& x, const FieldTower& sub) const;
  FieldElement from_coords_over(const FieldTower& sub, std::span<const FieldElement> coords) const;
  /// Power-basis element number s of this field over `sub`.
  FieldElement basis_over(const FieldTower& sub, std::size_t s) const;

  /// Parses expressions such as "1+1i", "3/2*sqrt2 - i", "(1+zeta6)^2".
  FieldElement parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const FieldTower& a, const FieldTower& b) { return a.level_ == b.level_; }

  const detail::Level& raw() const { return *level_; }

 private:
  explicit FieldTower(std::shared_ptr<const detail::Level> level) : level_(std::move(level)) {}
  std::shared_ptr<const detail::Level> level_;
};

/// An element of a FieldTower level, always stored reduced.
class FieldElement {
 public:
  FieldElement(FieldTower owner, std::vector<Rational> flat);

  const FieldTower& field() const { return owner_; }
  std::span<const Rational> flat() const { return coords_; }
  /// Coordinates over the immediate base level.
  std::vector<FieldElement> coords() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws WrongShape when not rational

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& r);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& r) { return a *= r; }
  friend FieldElement operator*(const Rational& r, FieldElement a) { return a *= r; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void require_same(const FieldElement& o) const;
  FieldTower owner_;
  std::vector<Rational> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

/// A field automorphism of `owner` fixing the level `fixed` pointwise, stored
/// as its matrix on the flat rational coordinates.
class Automorphism {
 public:
  Automorphism(FieldTower owner, FieldTower fixed, std::string name, std::vector<std::vector<Rational>> columns);

  /// Identity of `owner` over `fixed`.
  static Automorphism identity(const FieldTower& owner, const FieldTower& fixed);
  /// The k-th listed relative automorphism of the top level of `owner`.
  static Automorphism relative(const FieldTower& owner, std::size_t k);

  const FieldTower& field() const { return owner_; }
  const FieldTower& fixed_level() const { return fixed_; }
  const std::string& name() const { return name_; }

  FieldElement apply(const FieldElement& x) const;
  /// (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;
  bool is_identity() const;
  /// Same action on the field; names are ignored.
  bool same_action(const Automorphism& other) const { return columns_ == other.columns_; }

 private:
  FieldTower owner_;
  FieldTower fixed_;
  std::string name_;
  std::vector<std::vector<Rational>> columns_;  // columns_[k] = image of flat basis element k
};

/// Gal(E, F) with its composition table: table[a][b] = index of a o b.
struct GaloisGroup {
  FieldTower field;
  FieldTower fixed;
  std::vector<Automorphism> elements;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return elements.size(); }
  std::size_t identity_index() const;
  std::size_t inverse_index(std::size_t a) const;
  /// Index of the element with the given name, or npos.
  std::size_t find(std::string_view name) const;
};

/// Automorphisms of E fixing F (F a level of E). Throws NotGalois when fewer
/// than [E:F] automorphisms are found.
GaloisGroup galois_group(const FieldTower& E, const FieldTower& F);

bool fixed_by_group(const FieldElement& x, const std::vector<Automorphism>& group);

/// Minimal polynomial of x over the level F of its tower (monic).
Polynomial minpoly_of(const FieldElement& x, const FieldTower& F);

}  // namespace galoislie

#endif
