#include "galoislie/field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "galoislie/error.hpp"
#include "galoislie/polynomial.hpp"

namespace galoislie {

namespace {

using Coords = std::vector<Rational>;

bool block_zero(const Rational* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (!p[i].is_zero()) return false;
  return true;
}

// out <- a * b on flat coordinates of level L
void mul_into(const detail::Level& L, const Rational* a, const Rational* b, Rational* out) {
  if (L.depth == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const detail::Level& B = *L.base;
  const std::size_t M = B.abs_degree;
  const std::size_t d = L.rel_degree;
  Coords acc((2 * d - 1) * M);
  Coords tmp(M);
  for (std::size_t j = 0; j < d; ++j) {
    if (block_zero(a + j * M, M)) continue;
    for (std::size_t k = 0; k < d; ++k) {
      if (block_zero(b + k * M, M)) continue;
      mul_into(B, a + j * M, b + k * M, tmp.data());
      for (std::size_t r = 0; r < M; ++r)
        if (!tmp[r].is_zero()) acc[(j + k) * M + r] += tmp[r];
    }
  }
  // theta^d = -sum_{l<d} c_l theta^l
  for (std::size_t m = 2 * d - 2; m >= d; --m) {
    const Rational* z = acc.data() + m * M;
    if (!block_zero(z, M)) {
      Coords zb(z, z + M);
      for (std::size_t l = 0; l < d; ++l) {
        const Coords& c = L.minpoly[l];
        if (block_zero(c.data(), M)) continue;
        mul_into(B, zb.data(), c.data(), tmp.data());
        for (std::size_t r = 0; r < M; ++r)
          if (!tmp[r].is_zero()) acc[(m - d + l) * M + r] -= tmp[r];
      }
    }
    if (m == d) break;
  }
  for (std::size_t i = 0; i < d * M; ++i) out[i] = std::move(acc[i]);
}

Coords mul_coords(const detail::Level& L, const Coords& a, const Coords& b) {
  Coords out(L.abs_degree);
  mul_into(L, a.data(), b.data(), out.data());
  return out;
}

// Solves A x = rhs over Q for square invertible A (columns given).
std::optional<Coords> solve_rational(std::vector<Coords> columns, Coords rhs) {
  const std::size_t n = rhs.size();
  std::vector<Coords> rows(n, Coords(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = columns[c][r];
    rows[r][n] = rhs[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == n) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    Rational inv = Rational(1) / rows[col][col];
    for (auto& x : rows[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c <= n; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  Coords x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = rows[r][n];
  return x;
}

Coords embed_coords(std::size_t target_abs, const Coords& x) {
  Coords out(target_abs);
  std::copy(x.begin(), x.end(), out.begin());
  return out;
}

Coords unit_coords(std::size_t n, std::size_t k) {
  Coords c(n);
  c[k] = Rational(1);
  return c;
}

}  // namespace

// ---------------------------------------------------------------- FieldTower

FieldTower FieldTower::rationals() {
  static const std::shared_ptr<const detail::Level> q = [] {
    auto level = std::make_shared<detail::Level>();
    level->generator = "";
    level->auto_images = {Coords{Rational(1)}};
    level->auto_names = {"id"};
    level->closure = {{0}};
    level->galois = true;
    level->irreducibility_verified = true;
    return std::shared_ptr<const detail::Level>(level);
  }();
  return FieldTower(q);
}

FieldTower FieldTower::base() const {
  if (!level_->base) throw Error(ErrorKind::NotSubLevel, "Q has no base level");
  return FieldTower(level_->base);
}

FieldTower FieldTower::level(std::size_t depth) const {
  if (depth > level_->depth) throw Error(ErrorKind::NotSubLevel, "level depth above tower");
  std::shared_ptr<const detail::Level> p = level_;
  while (p->depth > depth) p = p->base;
  return FieldTower(p);
}

bool FieldTower::has_level(const FieldTower& sub) const {
  if (sub.depth() > depth()) return false;
  return level(sub.depth()) == sub;
}

std::size_t FieldTower::degree_over(const FieldTower& sub) const {
  if (!has_level(sub)) throw Error(ErrorKind::NotSubLevel, sub.describe() + " is not a level of " + describe());
  return absolute_degree() / sub.absolute_degree();
}

std::vector<std::string> FieldTower::generator_names() const {
  std::vector<std::string> names;
  for (std::size_t d = 1; d <= depth(); ++d) names.push_back(level(d).generator_name());
  return names;
}

Polynomial FieldTower::minpoly() const {
  if (is_rationals()) throw Error(ErrorKind::NotSubLevel, "Q has no defining polynomial");
  FieldTower b = base();
  std::vector<FieldElement> coeffs;
  for (const auto& c : level_->minpoly) coeffs.push_back(b.from_flat(c));
  return Polynomial(b, std::move(coeffs));
}

FieldElement FieldTower::automorphism_image(std::size_t k) const {
  return from_flat(level_->auto_images.at(k));
}

FieldElement FieldTower::zero() const { return FieldElement(*this, Coords(absolute_degree())); }

FieldElement FieldTower::one() const { return FieldElement(*this, unit_coords(absolute_degree(), 0)); }

FieldElement FieldTower::generator() const {
  if (is_rationals()) return one();
  return FieldElement(*this, unit_coords(absolute_degree(), base().absolute_degree()));
}

FieldElement FieldTower::from_rational(const Rational& r) const {
  Coords c(absolute_degree());
  c[0] = r;
  return FieldElement(*this, std::move(c));
}

FieldElement FieldTower::from_flat(std::vector<Rational> coords) const {
  if (coords.size() != absolute_degree()) throw Error(ErrorKind::WrongShape, "flat coordinate count");
  return FieldElement(*this, std::move(coords));
}

FieldElement FieldTower::from_coords(std::span<const FieldElement> coords) const {
  if (is_rationals()) {
    if (coords.size() != 1) throw Error(ErrorKind::WrongShape, "Q element takes one coordinate");
    return coords[0];
  }
  return from_coords_over(base(), coords);
}

FieldElement FieldTower::embed(const FieldElement& x) const {
  if (x.field() == *this) return x;
  if (!has_level(x.field()))
    throw Error(ErrorKind::TowerMismatch, "cannot embed element of " + x.field().describe() + " into " + describe());
  Coords c(x.flat().begin(), x.flat().end());
  return FieldElement(*this, embed_coords(absolute_degree(), c));
}

std::vector<FieldElement> FieldTower::coords_over(const FieldElement& x, const FieldTower& sub) const {
  if (!(x.field() == *this)) throw Error(ErrorKind::TowerMismatch, "coords_over: element of another field");
  const std::size_t m = sub.absolute_degree();
  const std::size_t k = degree_over(sub);
  std::vector<FieldElement> out;
  out.reserve(k);
  auto flat = x.flat();
  for (std::size_t s = 0; s < k; ++s) out.push_back(sub.from_flat(Coords(flat.begin() + s * m, flat.begin() + (s + 1) * m)));
  return out;
}

FieldElement FieldTower::from_coords_over(const FieldTower& sub, std::span<const FieldElement> coords) const {
  const std::size_t m = sub.absolute_degree();
  const std::size_t k = degree_over(sub);
  if (coords.size() != k) throw Error(ErrorKind::WrongShape, "from_coords_over: coordinate count");
  Coords c(absolute_degree());
  for (std::size_t s = 0; s < k; ++s) {
    if (!(coords[s].field() == sub)) throw Error(ErrorKind::TowerMismatch, "from_coords_over: coordinate field");
    auto f = coords[s].flat();
    std::copy(f.begin(), f.end(), c.begin() + static_cast<long>(s * m));
  }
  return FieldElement(*this, std::move(c));
}

FieldElement FieldTower::basis_over(const FieldTower& sub, std::size_t s) const {
  if (s >= degree_over(sub)) throw Error(ErrorKind::IndexRange, "basis_over index");
  return FieldElement(*this, unit_coords(absolute_degree(), s * sub.absolute_degree()));
}

std::string FieldTower::describe() const {
  if (is_rationals()) return "Q";
  return base().describe() + "(" + generator_name() + ")";
}

namespace {

void validate_name(const std::string& name, const std::vector<std::string>& taken) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    throw Error(ErrorKind::Parse, "bad generator name '" + name + "'");
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
      throw Error(ErrorKind::Parse, "bad generator name '" + name + "'");
  if (std::find(taken.begin(), taken.end(), name) != taken.end())
    throw Error(ErrorKind::Parse, "generator name '" + name + "' already used in tower");
}

}  // namespace

FieldTower FieldTower::extend(const FieldTower& base, const Polynomial& minpoly, std::string generator,
                              const std::vector<std::vector<FieldElement>>& auto_image_coords,
                              std::vector<std::string> auto_names) {
  if (!(minpoly.field() == base)) throw Error(ErrorKind::TowerMismatch, "minimal polynomial not over the base level");
  if (minpoly.degree() < 2) throw Error(ErrorKind::Degenerate, "extension degree must be at least 2");
  if (!minpoly.is_monic()) throw Error(ErrorKind::Degenerate, "minimal polynomial must be monic");
  validate_name(generator, base.generator_names());

  auto level = std::make_shared<detail::Level>();
  level->base = base.level_;
  level->depth = base.depth() + 1;
  level->rel_degree = static_cast<std::size_t>(minpoly.degree());
  level->abs_degree = level->rel_degree * base.absolute_degree();
  level->generator = generator;
  for (const auto& c : minpoly.coeffs()) {
    auto f = c.flat();
    level->minpoly.emplace_back(f.begin(), f.end());
  }

  if (base.is_rationals() && minpoly.degree() <= 12) {
    if (!is_irreducible_over_Q(minpoly))
      throw Error(ErrorKind::Reducible, minpoly.to_string() + " is reducible over Q");
    level->irreducibility_verified = true;
  }

  const std::size_t d = level->rel_degree;
  const std::size_t M = base.absolute_degree();
  // identity image theta first
  level->auto_images.push_back(unit_coords(level->abs_degree, M));
  level->auto_names.push_back("id");
  if (!auto_names.empty() && auto_names.size() != auto_image_coords.size())
    throw Error(ErrorKind::WrongShape, "automorphism names do not match images");
  for (std::size_t k = 0; k < auto_image_coords.size(); ++k) {
    const auto& img = auto_image_coords[k];
    if (img.size() != d) throw Error(ErrorKind::WrongShape, "automorphism image needs one coordinate per power of the generator");
    Coords flat(level->abs_degree);
    for (std::size_t j = 0; j < d; ++j) {
      if (!(img[j].field() == base)) throw Error(ErrorKind::TowerMismatch, "automorphism image coordinate field");
      auto f = img[j].flat();
      std::copy(f.begin(), f.end(), flat.begin() + static_cast<long>(j * M));
    }
    std::string name = auto_names.empty() ? "s" + std::to_string(k + 1) : auto_names[k];
    auto existing = std::find(level->auto_images.begin(), level->auto_images.end(), flat);
    if (existing != level->auto_images.end()) {
      if (existing == level->auto_images.begin() && !auto_names.empty()) level->auto_names[0] = name;
      continue;
    }
    level->auto_images.push_back(std::move(flat));
    level->auto_names.push_back(std::move(name));
  }

  // roots of the minimal polynomial
  const detail::Level& L = *level;
  auto power = [&](const Coords& x, std::size_t e) {
    Coords r = unit_coords(L.abs_degree, 0);
    for (std::size_t i = 0; i < e; ++i) r = mul_coords(L, r, x);
    return r;
  };
  for (std::size_t k = 0; k < L.auto_images.size(); ++k) {
    Coords acc(L.abs_degree);
    Coords xp = unit_coords(L.abs_degree, 0);
    for (std::size_t l = 0; l <= d; ++l) {
      Coords term = mul_coords(L, embed_coords(L.abs_degree, L.minpoly[l]), xp);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
      xp = mul_coords(L, xp, L.auto_images[k]);
    }
    if (!block_zero(acc.data(), acc.size()))
      throw Error(ErrorKind::NonRoot, "automorphism image '" + L.auto_names[k] + "' is not a root of " + minpoly.to_string());
  }

  // closure: (a o b)(theta) = sum_j c_j * img_a^j where img_b = sum_j c_j theta^j
  const std::size_t n = L.auto_images.size();
  level->closure.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Coords result(L.abs_degree);
      for (std::size_t j = 0; j < d; ++j) {
        Coords cj(L.auto_images[b].begin() + static_cast<long>(j * M), L.auto_images[b].begin() + static_cast<long>((j + 1) * M));
        if (block_zero(cj.data(), M)) continue;
        Coords term = mul_coords(L, embed_coords(L.abs_degree, cj), power(L.auto_images[a], j));
        for (std::size_t i = 0; i < result.size(); ++i) result[i] += term[i];
      }
      auto it = std::find(L.auto_images.begin(), L.auto_images.end(), result);
      if (it == L.auto_images.end())
        throw Error(ErrorKind::NotClosed, "composition " + L.auto_names[a] + " o " + L.auto_names[b] + " is not listed");
      level->closure[a][b] = static_cast<std::size_t>(it - L.auto_images.begin());
    }
  level->galois = n == d;
  return FieldTower(std::shared_ptr<const detail::Level>(level));
}

FieldTower FieldTower::quadratic_over(const FieldTower& base, const FieldElement& d, std::string generator) {
  // t^2 - d, automorphism t -> -t
  Polynomial m(base, {-d, base.zero(), base.one()});
  std::vector<FieldElement> conj{base.zero(), -base.one()};
  return extend(base, m, std::move(generator), {conj}, {"conj"});
}

FieldTower FieldTower::quadratic(long d, std::string generator) {
  FieldTower q = rationals();
  return quadratic_over(q, q.from_rational(Rational(d)), std::move(generator));
}

FieldTower FieldTower::cyclotomic(int n, std::string generator) {
  if (n < 3 || n > 12) throw Error(ErrorKind::Degenerate, "cyclotomic fields supported for 3 <= n <= 12");
  FieldTower q = rationals();
  Polynomial phi = cyclotomic_polynomial(n);
  const std::size_t d = static_cast<std::size_t>(phi.degree());
  // zeta^k reduced modulo phi gives the image coordinates
  std::vector<std::vector<FieldElement>> images;
  std::vector<std::string> names;
  for (int k = 2; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    Polynomial xk = Polynomial::monomial(q.one(), static_cast<std::size_t>(k));
    Polynomial r = xk.divmod(phi).second;
    std::vector<FieldElement> coords;
    for (std::size_t j = 0; j < d; ++j) coords.push_back(r.coeff(j));
    images.push_back(std::move(coords));
    names.push_back("k" + std::to_string(k));
  }
  return extend(q, phi, std::move(generator), images, names);
}

// ---------------------------------------------------------------- parsing

namespace {

class ElementParser {
 public:
  ElementParser(const FieldTower& field, std::string_view text) : field_(field), text_(text) {
    auto names = field.generator_names();
    for (std::size_t d = 0; d < names.size(); ++d) gens_.emplace_back(names[d], field.embed(field.level(d + 1).generator()));
  }

  FieldElement parse() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "element '" + std::string(text_) + "' over " + field_.describe() + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        FieldElement d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  FieldElement power() {
    FieldElement base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be an integer");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) fail("zero to a negative power");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  FieldElement atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return field_.from_rational(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (const auto& [g, value] : gens_)
        if (g == name) return value;
      fail("unknown generator '" + name + "'");
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  const FieldTower& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, FieldElement>> gens_;
};

}  // namespace

FieldElement FieldTower::parse(std::string_view text) const { return ElementParser(*this, text).parse(); }

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldTower owner, std::vector<Rational> flat) : owner_(std::move(owner)), coords_(std::move(flat)) {
  if (coords_.size() != owner_.absolute_degree()) throw Error(ErrorKind::WrongShape, "field element coordinate count");
}

std::vector<FieldElement> FieldElement::coords() const {
  if (owner_.is_rationals()) return {*this};
  return owner_.coords_over(*this, owner_.base());
}

bool FieldElement::is_zero() const { return block_zero(coords_.data(), coords_.size()); }

bool FieldElement::is_one() const { return coords_[0].is_one() && block_zero(coords_.data() + 1, coords_.size() - 1); }

bool FieldElement::is_rational() const { return block_zero(coords_.data() + 1, coords_.size() - 1); }

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::WrongShape, to_string() + " is not rational");
  return coords_[0];
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!(owner_ == o.owner_))
    throw Error(ErrorKind::TowerMismatch, "elements of " + owner_.describe() + " and " + o.owner_.describe());
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(o);
  if (coords_.size() == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  coords_ = mul_coords(owner_.raw(), coords_, o.coords_);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& r) {
  for (auto& c : coords_) c *= r;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + owner_.describe());
  const std::size_t n = coords_.size();
  if (n == 1) return FieldElement(owner_, {Rational(1) / coords_[0]});
  std::vector<Coords> columns;
  for (std::size_t k = 0; k < n; ++k) columns.push_back(mul_coords(owner_.raw(), coords_, unit_coords(n, k)));
  auto x = solve_rational(std::move(columns), unit_coords(n, 0));
  if (!x) throw Error(ErrorKind::DivisionByZero, "singular multiplication map (reducible minimal polynomial?)");
  return FieldElement(owner_, std::move(*x));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result = owner_.one();
  FieldElement b = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.owner_ == b.owner_ && a.coords_ == b.coords_; }

namespace {

std::string monomial_name(const detail::Level& L, std::size_t index) {
  std::string name;
  const detail::Level* p = &L;
  std::vector<std::string> parts;
  while (p->depth > 0) {
    std::size_t M = p->base->abs_degree;
    std::size_t j = index / M;
    index %= M;
    if (j == 1)
      parts.push_back(p->generator);
    else if (j > 1)
      parts.push_back(p->generator + "^" + std::to_string(j));
    p = p->base.get();
  }
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!name.empty()) name += "*";
    name += *it;
  }
  return name;
}

}  // namespace

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c.is_zero()) continue;
    std::string mono = monomial_name(owner_.raw(), i);
    std::string term;
    if (mono.empty())
      term = c.to_string();
    else if (c.is_one())
      term = mono;
    else if (c == Rational(-1))
      term = "-" + mono;
    else
      term = c.to_string() + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::size_t FieldElement::hash() const {
  std::size_t h = owner_.depth();
  for (const auto& c : coords_) h = h * 1000003u ^ c.hash();
  return h;
}

// ---------------------------------------------------------------- automorphisms

Automorphism::Automorphism(FieldTower owner, FieldTower fixed, std::string name, std::vector<std::vector<Rational>> columns)
    : owner_(std::move(owner)), fixed_(std::move(fixed)), name_(std::move(name)), columns_(std::move(columns)) {
  if (columns_.size() != owner_.absolute_degree()) throw Error(ErrorKind::WrongShape, "automorphism matrix size");
}

Automorphism Automorphism::identity(const FieldTower& owner, const FieldTower& fixed) {
  const std::size_t n = owner.absolute_degree();
  std::vector<Coords> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(unit_coords(n, k));
  return Automorphism(owner, fixed, "id", std::move(cols));
}

namespace {

// Columns of the automorphism sending the generator of `owner` to `image` and
// acting on base-level basis elements by `lower` (already computed images, as
// flat coords of the base).
std::vector<Coords> extension_columns(const FieldTower& owner, const Coords& image, const std::vector<Coords>& lower) {
  const detail::Level& L = owner.raw();
  const std::size_t M = L.base->abs_degree;
  const std::size_t d = L.rel_degree;
  std::vector<Coords> cols(L.abs_degree);
  Coords theta_pow = unit_coords(L.abs_degree, 0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < M; ++r) cols[j * M + r] = mul_coords(L, theta_pow, embed_coords(L.abs_degree, lower[r]));
    theta_pow = mul_coords(L, theta_pow, image);
  }
  return cols;
}

}  // namespace

Automorphism Automorphism::relative(const FieldTower& owner, std::size_t k) {
  if (owner.is_rationals()) return identity(owner, owner);
  if (k >= owner.automorphism_count()) throw Error(ErrorKind::IndexRange, "relative automorphism index");
  const std::size_t M = owner.base().absolute_degree();
  std::vector<Coords> lower;
  for (std::size_t r = 0; r < M; ++r) lower.push_back(unit_coords(M, r));
  return Automorphism(owner, owner.base(), owner.automorphism_name(k),
                      extension_columns(owner, owner.raw().auto_images[k], lower));
}

FieldElement Automorphism::apply(const FieldElement& x) const {
  if (!(x.field() == owner_))
    throw Error(ErrorKind::TowerMismatch, "automorphism of " + owner_.describe() + " applied to element of " + x.field().describe());
  const std::size_t n = columns_.size();
  Coords out(n);
  auto f = x.flat();
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!columns_[k][i].is_zero()) out[i] += columns_[k][i] * f[k];
  }
  return FieldElement(owner_, std::move(out));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (!(owner_ == other.owner_)) throw Error(ErrorKind::TowerMismatch, "composing automorphisms of different fields");
  std::vector<Coords> cols;
  for (const auto& c : other.columns_) {
    FieldElement img = apply(owner_.from_flat(c));
    cols.emplace_back(img.flat().begin(), img.flat().end());
  }
  return Automorphism(owner_, fixed_, name_ + "*" + other.name_, std::move(cols));
}

bool Automorphism::is_identity() const {
  for (std::size_t k = 0; k < columns_.size(); ++k)
    if (columns_[k] != unit_coords(columns_.size(), k)) return false;
  return true;
}

// ---------------------------------------------------------------- Galois groups

std::size_t GaloisGroup::identity_index() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].is_identity()) return i;
  throw Error(ErrorKind::NotClosed, "group without identity");
}

std::size_t GaloisGroup::inverse_index(std::size_t a) const {
  std::size_t e = identity_index();
  for (std::size_t b = 0; b < elements.size(); ++b)
    if (table[a][b] == e) return b;
  throw Error(ErrorKind::NotClosed, "element without inverse");
}

std::size_t GaloisGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].name() == name) return i;
  return static_cast<std::size_t>(-1);
}

namespace {

struct RawAut {
  std::vector<Coords> columns;
  std::vector<std::string> parts;  // names from the level above F upward
};

std::vector<RawAut> automorphisms_over(const FieldTower& E, const FieldTower& F) {
  const std::size_t n = E.absolute_degree();
  if (E == F) {
    RawAut id;
    for (std::size_t k = 0; k < n; ++k) id.columns.push_back(unit_coords(n, k));
    return {id};
  }
  FieldTower B = E.base();
  std::vector<RawAut> lower = automorphisms_over(B, F);
  const detail::Level& L = E.raw();
  std::vector<RawAut> out;
  for (const auto& tau : lower) {
    // tau must fix the minimal polynomial coefficients
    Automorphism t(B, F, "", tau.columns);
    bool fixes = true;
    for (const auto& c : L.minpoly)
      if (!(t.apply(B.from_flat(c)) == B.from_flat(c))) {
        fixes = false;
        break;
      }
    if (!fixes) continue;
    for (std::size_t k = 0; k < L.auto_images.size(); ++k) {
      RawAut a;
      a.columns = extension_columns(E, L.auto_images[k], tau.columns);
      a.parts = tau.parts;
      a.parts.push_back(L.auto_names[k]);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::string compose_name(const std::vector<std::string>& parts) {
  bool all_id = std::all_of(parts.begin(), parts.end(), [](const std::string& s) { return s == "id"; });
  if (all_id) return "id";
  if (parts.size() == 1) return parts[0];
  std::string name;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!name.empty()) name += "|";
    name += *it;
  }
  return name;
}

}  // namespace

GaloisGroup galois_group(const FieldTower& E, const FieldTower& F) {
  std::size_t degree = E.degree_over(F);
  std::vector<RawAut> raw = automorphisms_over(E, F);
  if (raw.size() != degree)
    throw Error(ErrorKind::NotGalois, E.describe() + " over " + F.describe() + ": found " + std::to_string(raw.size()) +
                                          " automorphisms for degree " + std::to_string(degree));
  GaloisGroup g{E, F, {}, {}};
  for (auto& a : raw) g.elements.emplace_back(E, F, compose_name(a.parts), std::move(a.columns));
  const std::size_t n = g.elements.size();
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Automorphism ab = g.elements[a].compose(g.elements[b]);
      std::size_t idx = n;
      for (std::size_t c = 0; c < n; ++c)
        if (g.elements[c].same_action(ab)) idx = c;
      if (idx == n) throw Error(ErrorKind::NotClosed, "Galois group not closed under composition");
      g.table[a][b] = idx;
    }
  return g;
}

bool fixed_by_group(const FieldElement& x, const std::vector<Automorphism>& group) {
  return std::all_of(group.begin(), group.end(), [&](const Automorphism& s) { return s.apply(x) == x; });
}

}  // namespace galoislie
