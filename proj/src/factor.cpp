// Factorization over Q: squarefree split, rational roots, then big-prime
// Zassenhaus with exhaustive recombination of the modular factors.
#include <gmpxx.h>

#include <algorithm>
#include <functional>

#include "galoislie/error.hpp"
#include "galoislie/polynomial.hpp"

namespace galoislie {

namespace {

using ZPoly = std::vector<mpz_class>;  // low to high

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

// Primitive integer polynomial with positive leading coefficient.
ZPoly to_primitive(const Polynomial& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) {
    Rational r = c.to_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.denominator().get_mpz_t());
  }
  ZPoly z;
  for (const auto& c : p.coeffs()) {
    Rational r = c.to_rational();
    z.push_back(r.numerator() * (den / r.denominator()));
  }
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

Polynomial from_zpoly(const ZPoly& z) {
  FieldTower q = FieldTower::rationals();
  std::vector<Rational> c;
  for (const auto& x : z) c.emplace_back(x);
  return Polynomial::from_rationals(q, c).monic();
}

// ---- arithmetic in F_p[t] ----

struct ModP {
  mpz_class p;

  mpz_class red(const mpz_class& a) const {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r;
  }
  mpz_class inv(const mpz_class& a) const {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  ZPoly reduce(ZPoly a) const {
    for (auto& c : a) c = red(c);
    ztrim(a);
    return a;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r));
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(std::move(r));
  }
  std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b) const {
    const long db = zdeg(b);
    if (zdeg(a) < db) return {{}, a};
    ZPoly q(static_cast<std::size_t>(zdeg(a) - db + 1), 0);
    mpz_class il = inv(b.back());
    while (!a.empty() && zdeg(a) >= db) {
      const auto shift = static_cast<std::size_t>(zdeg(a) - db);
      mpz_class c = red(a.back() * il);
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = red(a[shift + i] - c * b[i]);
      q[shift] = c;
      ztrim(a);
    }
    return {q, a};
  }
  ZPoly mod(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }
  ZPoly monic(ZPoly a) const {
    if (a.empty()) return a;
    mpz_class il = inv(a.back());
    for (auto& c : a) c = red(c * il);
    return a;
  }
  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ZPoly derivative(const ZPoly& a) const {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    return reduce(r);
  }
  ZPoly powmod(ZPoly base, mpz_class e, const ZPoly& m) const {
    ZPoly result{1};
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, base), m);
      e >>= 1;
      if (e > 0) base = mod(mul(base, base), m);
    }
    return result;
  }
};

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over F_p, p odd.
std::vector<ZPoly> factor_mod_p(const ModP& F, ZPoly f) {
  std::vector<std::pair<ZPoly, long>> ddf;
  ZPoly x{0, 1};
  ZPoly h = x;
  for (long d = 1; 2 * d <= zdeg(f); ++d) {
    h = F.powmod(h, F.p, f);
    ZPoly g = F.gcd(F.sub(h, x), f);
    if (zdeg(g) > 0) {
      ddf.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (zdeg(f) > 0) ddf.emplace_back(f, zdeg(f));

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240607UL);
  std::vector<ZPoly> out;
  std::function<void(const ZPoly&, long)> split = [&](const ZPoly& g, long d) {
    if (zdeg(g) == d) {
      out.push_back(g);
      return;
    }
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), F.p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
      ZPoly a;
      for (long i = 0; i < zdeg(g); ++i) a.push_back(rng.get_z_range(F.p));
      ztrim(a);
      if (zdeg(a) < 1) continue;
      ZPoly b = F.sub(F.powmod(a, e, g), ZPoly{1});
      ZPoly c = F.gcd(b, g);
      if (zdeg(c) > 0 && zdeg(c) < zdeg(g)) {
        split(c, d);
        split(F.divmod(g, c).first, d);
        return;
      }
    }
  };
  for (const auto& [g, d] : ddf) split(g, d);
  return out;
}

// Exact division in Z[t]; nullopt when b does not divide a.
std::optional<ZPoly> zdivide(ZPoly a, const ZPoly& b) {
  const long db = zdeg(b);
  if (zdeg(a) < db) return std::nullopt;
  ZPoly q(static_cast<std::size_t>(zdeg(a) - db + 1), 0);
  while (!a.empty() && zdeg(a) >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = a.back() / b.back();
    const auto shift = static_cast<std::size_t>(zdeg(a) - db);
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    q[shift] = c;
    ztrim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

ZPoly primitive_part(ZPoly z) {
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

// Irreducible factors of a primitive squarefree f in Z[t] with f(0) != 0.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (zdeg(f) <= 1) return {f};
  const auto n = static_cast<unsigned long>(zdeg(f));
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class lc = abs(f.back());
  mpz_class bound = (mpz_class(1) << n) * norm * lc;
  mpz_class p = 2 * bound + 1;
  ModP F;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (lc % p == 0) continue;
    F.p = p;
    ZPoly fp = F.reduce(f);
    if (zdeg(F.gcd(fp, F.derivative(fp))) == 0) break;
  }
  std::vector<ZPoly> modular = factor_mod_p(F, F.monic(F.reduce(f)));

  auto symmetric = [&](ZPoly a) {
    mpz_class half = p / 2;
    for (auto& c : a)
      if (c > half) c -= p;
    return a;
  };

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{rest.back()};
      for (auto i : idx) g = F.mul(g, modular[i]);
      g = primitive_part(symmetric(g));
      if (auto q = zdivide(rest, g)) {
        found.push_back(g);
        rest = primitive_part(*q);
        for (std::size_t k = s; k-- > 0;) modular.erase(modular.begin() + static_cast<long>(idx[k]));
        hit = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == modular.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (zdeg(rest) > 0) found.push_back(rest);
  return found;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    Rational x = a.coeffs()[k].to_rational(), y = b.coeffs()[k].to_rational();
    if (x != y) return x < y;
  }
  return false;
}

void require_rational(const Polynomial& p) {
  if (!p.has_rational_coeffs()) throw Error(ErrorKind::FieldMismatch, "polynomial must have rational coefficients");
}

// Divisors of |n| (n != 0) if they can be listed cheaply.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 1000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
      break;
    }
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [q, e] : primes) {
    std::size_t m = out.size();
    mpz_class pw = 1;
    for (unsigned k = 0; k < e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  require_rational(p);
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  ZPoly z = to_primitive(p);
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  z.erase(z.begin(), z.begin() + static_cast<long>(low));
  if (zdeg(z) < 1) return roots;

  auto nums = divisors(z.front());
  auto dens = divisors(z.back());
  if (nums && dens) {
    Polynomial q = from_zpoly(z);
    for (const auto& a : *nums)
      for (const auto& b : *dens) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        for (int sgn : {1, -1}) {
          Rational r(Rational(mpz_class(a * sgn)) / Rational(b));
          if (q.eval(q.field().from_rational(r)).is_zero()) roots.push_back(r);
        }
      }
  } else {
    for (const auto& f : detail::factor_over_Q_bounded(from_zpoly(z), static_cast<std::size_t>(zdeg(z))))
      if (f.poly.degree() == 1) roots.push_back(-f.poly.coeff(0).to_rational());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace detail {

std::vector<Factor> factor_over_Q_bounded(const Polynomial& p, std::size_t max_degree) {
  require_rational(p);
  if (p.degree() > static_cast<long>(max_degree))
    throw Error(ErrorKind::DegreeTooLarge, "factorization limited to degree " + std::to_string(max_degree));
  std::vector<Factor> out;
  if (p.degree() < 1) return out;
  FieldTower q = FieldTower::rationals();
  std::vector<Rational> rc;
  for (const auto& c : p.coeffs()) rc.push_back(c.to_rational());
  Polynomial base = Polynomial::from_rationals(q, rc);
  auto parts = squarefree_decomposition(base);
  for (std::size_t m = 0; m < parts.size(); ++m) {
    if (parts[m].degree() < 1) continue;
    ZPoly z = to_primitive(parts[m]);
    if (z.front() == 0) {
      out.push_back({Polynomial::linear(q.zero()), m + 1});
      z.erase(z.begin());
    }
    for (const auto& g : zassenhaus(z))
      if (zdeg(g) > 0) out.push_back({from_zpoly(g), m + 1});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

}  // namespace detail

std::vector<Factor> factor_over_Q(const Polynomial& p) { return detail::factor_over_Q_bounded(p, 12); }

bool is_irreducible_over_Q(const Polynomial& p) {
  if (p.degree() < 1) return false;
  auto f = factor_over_Q(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace galoislie
