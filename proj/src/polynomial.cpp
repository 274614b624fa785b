#include "galoislie/polynomial.hpp"

#include <algorithm>

#include "galoislie/error.hpp"
#include "galoislie/linalg.hpp"

namespace galoislie {

Polynomial::Polynomial(FieldTower field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw Error(ErrorKind::TowerMismatch, "polynomial coefficient from another field");
  trim();
}

Polynomial Polynomial::from_rationals(const FieldTower& field, const std::vector<Rational>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.push_back(field.from_rational(r));
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, c.field().zero());
  coeffs[degree] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::linear(const FieldElement& a) { return Polynomial(a.field(), {-a, a.field().one()}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) return field_.zero();
  return coeffs_.back();
}

bool Polynomial::has_rational_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_rational(); });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!(field_ == o.field_)) throw Error(ErrorKind::TowerMismatch, "polynomials over different fields");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!(field_ == o.field_)) throw Error(ErrorKind::TowerMismatch, "polynomials over different fields");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (!(field_ == o.field_)) throw Error(ErrorKind::TowerMismatch, "polynomials over different fields");
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (!o.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (!(field_ == divisor.field_)) throw Error(ErrorKind::TowerMismatch, "polynomials over different fields");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(field_), rem};
  std::vector<FieldElement> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), field_.zero());
  FieldElement inv_lead = divisor.leading().inverse();
  const auto dd = static_cast<std::size_t>(divisor.degree());
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree()) - dd;
    FieldElement q = rem.leading() * inv_lead;
    for (std::size_t i = 0; i <= dd; ++i)
      if (!divisor.coeffs_[i].is_zero()) rem.coeffs_[shift + i] -= q * divisor.coeffs_[i];
    quot[shift] = q;
    rem.coeffs_.back() = field_.zero();  // exact cancellation
    rem.trim();
  }
  return {Polynomial(field_, std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::pow(std::size_t exponent) const {
  Polynomial result(field_, {field_.one()});
  for (std::size_t i = 0; i < exponent; ++i) result *= *this;
  return result;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  const FieldTower& target = x.field();
  FieldElement acc = target.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += target.embed(coeffs_[i]);
  }
  return acc;
}

Polynomial Polynomial::map_coeffs(const Automorphism& sigma) const {
  std::vector<FieldElement> c;
  for (const auto& x : coeffs_) c.push_back(sigma.apply(x));
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::embed_into(const FieldTower& upper) const {
  std::vector<FieldElement> c;
  for (const auto& x : coeffs_) c.push_back(upper.embed(x));
  return Polynomial(upper, std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+*") != std::string::npos || cs.find(" - ") != std::string::npos ||
                    (!c.is_rational() && cs[0] == '-');
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty())
      term = compound ? "(" + cs + ")" : cs;
    else if (c.is_one())
      term = mono;
    else if ((-c).is_one())
      term = "-" + mono;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b) {
  const FieldTower& F = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0(F, {F.one()}), s1(F);
  Polynomial t0(F), t1(F, {F.one()});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() < 1) return out;
  const FieldTower& F = p.field();
  Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = f.divmod(a).first;
  Polynomial c = f.derivative().divmod(a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  // drop trailing constant factors
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  for (auto& q : out)
    if (q.degree() < 1) q = Polynomial(F, {F.one()});
  return out;
}

Polynomial minpoly_of(const FieldElement& x, const FieldTower& F) {
  const FieldTower& E = x.field();
  const std::size_t n = E.degree_over(F);
  std::vector<Vector> powers;
  FieldElement p = E.one();
  for (std::size_t deg = 0; deg <= n; ++deg) {
    powers.push_back(E.coords_over(p, F));
    if (deg >= 1) {
      Matrix m = Matrix::from_columns(F, n, powers);
      auto ns = nullspace(m);
      if (!ns.empty()) {
        Vector v = ns.front();
        FieldElement lead = v.back();
        std::vector<FieldElement> coeffs;
        for (auto& c : v) coeffs.push_back(c / lead);
        return Polynomial(F, std::move(coeffs));
      }
    }
    p *= x;
  }
  throw Error(ErrorKind::Degenerate, "no linear dependence among powers (inconsistent tower)");
}

Polynomial cyclotomic_polynomial(int n) {
  FieldTower q = FieldTower::rationals();
  if (n < 1) throw Error(ErrorKind::Degenerate, "cyclotomic index must be positive");
  Polynomial p = Polynomial::monomial(q.one(), static_cast<std::size_t>(n)) - Polynomial(q, {q.one()});
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.divmod(cyclotomic_polynomial(d)).first;
  return p;
}

}  // namespace galoislie
