#include "galoislie/rational.hpp"

#include <cctype>
#include <functional>

#include "galoislie/error.hpp"

namespace galoislie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NonRoot: return "NonRoot";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::JacobiFailure: return "JacobiFailure";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::IndexRange: return "IndexRange";
    case ErrorKind::NotSubLevel: return "NotSubLevel";
    case ErrorKind::NotSuperLevel: return "NotSuperLevel";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotTwoStep: return "NotTwoStep";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::OddP: return "OddP";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::TVanishes: return "TVanishes";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::UncertifiedDecomposition: return "UncertifiedDecomposition";
    case ErrorKind::OracleUndecided: return "OracleUndecided";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return Rational(1) / pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  mpz_class num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, num)
                : parse_integer(trim(s.substr(0, slash)), num) && parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(to_string());
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  mpz_class n = r.numerator(), d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(sn, sd);
  return true;
}

}  // namespace galoislie
