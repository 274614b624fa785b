#include "galoislie/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "galoislie/catalog.hpp"
#include "galoislie/decompose.hpp"
#include "galoislie/error.hpp"
#include "galoislie/galois.hpp"
#include "galoislie/manifest.hpp"
#include "galoislie/pfaffian.hpp"
#include "json.hpp"

namespace galoislie {

using nlohmann::json;

namespace {

// Built-in field names: Q, Qi, Qsqrt<d>, Qzeta<n>, and <field>(i) or
// <field>(sqrt<d>) for a quadratic step on top of another field.
class Fields {
 public:
  explicit Fields(const Manifest& m) : manifest_(m) {}

  FieldTower resolve(const std::string& name) {
    if (name == "Q") return FieldTower::rationals();
    if (const auto* f = manifest_.field(name)) return *f;
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    FieldTower f = build(name);
    cache_.emplace(name, f);
    return f;
  }

  std::string name_of(const FieldTower& f) const {
    if (f.is_rationals()) return "Q";
    for (const auto& [n, g] : manifest_.fields)
      if (g == f) return n;
    for (const auto& [n, g] : cache_)
      if (g == f) return n;
    return f.describe();
  }

 private:
  static long parse_long(const std::string& s, const std::string& whole) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (s.empty() || pos != s.size()) throw Error(ErrorKind::UnknownName, "unknown field '" + whole + "'");
    return v;
  }

  static std::string sqrt_name(long d) { return d < 0 ? "sqrtm" + std::to_string(-d) : "sqrt" + std::to_string(d); }

  FieldTower build(const std::string& name) {
    if (!name.empty() && name.back() == ')') {
      auto open = name.rfind('(');
      if (open == std::string::npos || open == 0) throw Error(ErrorKind::UnknownName, "unknown field '" + name + "'");
      FieldTower base = resolve(name.substr(0, open));
      std::string step = name.substr(open + 1, name.size() - open - 2);
      if (step == "i") return FieldTower::quadratic_over(base, base.from_rational(-1), "i");
      if (step.rfind("sqrt", 0) == 0) {
        long d = parse_long(step.substr(4), name);
        return FieldTower::quadratic_over(base, base.from_rational(d), sqrt_name(d));
      }
      throw Error(ErrorKind::UnknownName, "unknown field step '" + step + "'");
    }
    if (name == "Qi") return FieldTower::quadratic(-1, "i");
    if (name.rfind("Qsqrt", 0) == 0) {
      long d = parse_long(name.substr(5), name);
      return FieldTower::quadratic(d, sqrt_name(d));
    }
    if (name.rfind("Qzeta", 0) == 0) {
      long n = parse_long(name.substr(5), name);
      return FieldTower::cyclotomic(static_cast<int>(n), "zeta" + std::to_string(n));
    }
    throw Error(ErrorKind::UnknownName, "unknown field '" + name + "'");
  }

  const Manifest& manifest_;
  std::map<std::string, FieldTower> cache_;
};

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  long v = -1;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size() || v < 0) throw Error(ErrorKind::Parse, "expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

Automorphism nontrivial_relative(const FieldTower& F) {
  if (F.is_rationals() || F.automorphism_count() < 2)
    throw Error(ErrorKind::NotGalois, "field " + F.describe() + " has no nontrivial relative automorphism");
  for (std::size_t k = 0; k < F.automorphism_count(); ++k) {
    Automorphism a = Automorphism::relative(F, k);
    if (!a.is_identity()) return a;
  }
  throw Error(ErrorKind::NotGalois, "no nontrivial automorphism");
}

LieAlgebra family(const std::string& fam, const std::vector<std::string>& args, const FieldTower& F) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorKind::Parse, "family '" + fam + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (fam == "h3" || fam == "heisenberg") {
    need(0);
    return heisenberg(F);
  }
  if (fam == "abelian") {
    need(1);
    std::size_t n = parse_count(args[0]);
    if (n == 0) throw Error(ErrorKind::IndexRange, "abelian algebra needs positive dimension");
    return abelian(F, n);
  }
  if (fam == "g" || fam == "g_lambda") {
    need(1);
    return g_lambda(F.parse(args[0]));
  }
  if (fam == "r3" || fam == "r3_lambda") {
    need(1);
    return r3_lambda(F.parse(args[0]));
  }
  if (fam == "r3a" || fam == "r3_lambda_plus_abelian") {
    need(1);
    return r3_lambda_plus_abelian(F.parse(args[0]));
  }
  if (fam == "g1" || fam == "g1_alpha") {
    need(1);
    return g1_alpha(F.parse(args[0]));
  }
  if (fam == "nintot") {
    need(3);
    return nintot_family(F.parse(args[0]), nontrivial_relative(F), parse_count(args[1]), parse_count(args[2]));
  }
  throw Error(ErrorKind::UnknownName, "unknown family '" + fam + "'");
}

// References look like g[1+i]@Qi + 2*h3@Qi, or a manifest algebra name.
LieAlgebra resolve_algebra(const std::string& ref, const Manifest& m, Fields& fields) {
  std::vector<LieAlgebra> parts;
  for (const auto& raw : split_top(ref, '+')) {
    std::string term = trim(raw);
    if (term.empty()) throw Error(ErrorKind::Parse, "empty term in algebra reference '" + ref + "'");
    std::size_t copies = 1;
    auto star = term.find('*');
    if (star != std::string::npos && term.find('[') > star) {
      copies = parse_count(trim(term.substr(0, star)));
      term = trim(term.substr(star + 1));
      if (copies == 0) throw Error(ErrorKind::IndexRange, "multiplicity must be positive");
    }
    std::optional<LieAlgebra> alg;
    if (const auto* a = m.algebra(term)) {
      alg = *a;
    } else if (const auto* bad = m.rejected_algebra(term)) {
      throw Error(ErrorKind::JacobiFailure, bad->reason);
    } else {
      std::string fam = term, field = "Q";
      auto at = split_top(term, '@');
      if (at.size() == 2) {
        fam = at[0];
        field = at[1];
      } else if (at.size() > 2) {
        throw Error(ErrorKind::Parse, "bad algebra reference '" + term + "'");
      }
      std::vector<std::string> args;
      auto open = fam.find('[');
      if (open != std::string::npos) {
        if (fam.back() != ']') throw Error(ErrorKind::Parse, "unbalanced brackets in '" + term + "'");
        for (const auto& a : split_top(fam.substr(open + 1, fam.size() - open - 2), ',')) args.push_back(trim(a));
        fam = fam.substr(0, open);
      }
      alg = family(fam, args, fields.resolve(field));
    }
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(*alg);
  }
  for (const auto& p : parts)
    if (!(p.field() == parts.front().field())) throw Error(ErrorKind::FieldMismatch, "summands live over different fields");
  return parts.size() == 1 ? parts.front() : direct_sum(parts);
}

FieldTower resolve_level(const LieAlgebra& L, const std::string& name, Fields& fields) {
  FieldTower F = fields.resolve(name);
  if (!L.field().has_level(F))
    throw Error(ErrorKind::NotSubLevel, name + " is not a level of " + L.field().describe());
  return F;
}

Automorphism resolve_sigma(const FieldTower& E, const std::string& name) {
  for (std::size_t d = E.depth(); d-- > 0;) {
    std::optional<GaloisGroup> G;
    try {
      G = galois_group(E, E.level(d));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotGalois) throw;
      continue;
    }
    std::size_t k = G->find(name);
    if (k != static_cast<std::size_t>(-1)) return G->elements[k];
  }
  throw Error(ErrorKind::UnknownName, "no automorphism named '" + name + "' on " + E.describe());
}

std::vector<std::string> table_lines(const LieAlgebra& L) {
  std::vector<std::string> lines;
  std::istringstream in(L.bracket_table());
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

json algebra_json(const LieAlgebra& L, Fields& fields) {
  json br = json::array();
  for (const auto& c : L.constants())
    br.push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"k", c.k + 1}, {"coeff", c.value.to_string()}});
  return {{"field", fields.name_of(L.field())}, {"dim", L.dim()}, {"labels", L.labels()}, {"brackets", br}};
}

struct Report {
  int code = Success;
  std::vector<std::string> lines;
  json data = json::object();

  void line(const std::string& s) { lines.push_back(s); }
  void table(const LieAlgebra& L) {
    auto t = table_lines(L);
    if (t.empty()) line("(abelian)");
    for (auto& s : t) line(s);
  }
};

std::string iso_word(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic:
      return "isomorphic";
    case IsoVerdict::NotIsomorphic:
      return "not isomorphic";
    case IsoVerdict::Unknown:
      break;
  }
  return "unknown";
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::TVanishes:
    case ErrorKind::UncertifiedDecomposition:
    case ErrorKind::OracleUndecided:
      return Undecided;
    default:
      return InputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugate Lie algebras, forms over subfields and their invariants", "galoislie"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string manifest_path;
  app.add_flag("--json", as_json, "emit one JSON report object");
  app.add_option("--manifest", manifest_path, "file with named fields and algebras");

  std::string alg, alg2, sigma, level, fam, field = "Q", lambda, alpha, a_param;
  std::size_t n = 1, k = 1, j = 0;

  auto* check = app.add_subcommand("check", "Jacobi identity and fingerprint");
  check->add_option("algebra", alg)->required();
  auto* conj = app.add_subcommand("conjugate", "conjugate algebra by a field automorphism");
  conj->add_option("algebra", alg)->required();
  conj->add_option("--sigma", sigma)->required();
  auto* restrict = app.add_subcommand("restrict", "restriction of scalars to a level");
  restrict->add_option("algebra", alg)->required();
  restrict->add_option("--to", level)->required();
  auto* extend = app.add_subcommand("extend", "extension of scalars to a larger field");
  extend->add_option("algebra", alg)->required();
  extend->add_option("--to", level)->required();
  auto* sumconj = app.add_subcommand("verify-sumconjugate", "check the sum-of-conjugates isomorphism");
  sumconj->add_option("algebra", alg)->required();
  sumconj->add_option("--over", level)->required();
  auto* decomp = app.add_subcommand("decompose", "decomposition into indecomposable ideals");
  decomp->add_option("algebra", alg)->required();
  decomp->add_option("--over", level, "decompose the restriction to this level");
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian form of a two-step nilpotent algebra");
  pf->add_option("algebra", alg)->required();
  auto* invc = app.add_subcommand("invariant-c", "S^3/T^2 of the Pfaffian form, type (8,2)");
  invc->add_option("algebra", alg)->required();
  auto* count = app.add_subcommand("count-forms", "number of algebras with the same restriction");
  count->add_option("algebra", alg)->required();
  count->add_option("--over", level)->required();
  auto* cat = app.add_subcommand("catalog", "print a catalog algebra");
  cat->add_option("family", fam)->required();
  cat->add_option("--field", field);
  cat->add_option("--lambda", lambda);
  cat->add_option("--alpha", alpha);
  cat->add_option("--a", a_param);
  cat->add_option("--base", level);
  cat->add_option("--n", n);
  cat->add_option("--k", k);
  cat->add_option("--j", j);
  auto* match = app.add_subcommand("match", "Krull-Schmidt comparison of two algebras");
  match->add_option("first", alg)->required();
  match->add_option("second", alg2)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }

  Report r;
  std::string command = app.get_subcommands().front()->get_name();
  r.data["command"] = command;
  try {
    Manifest manifest;
    if (!manifest_path.empty()) {
      std::ifstream in(manifest_path);
      if (!in) throw Error(ErrorKind::Parse, "cannot read manifest '" + manifest_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      manifest = parse_manifest(buf.str());
    }
    Fields fields(manifest);

    if (command == "check") {
      try {
        LieAlgebra L = resolve_algebra(alg, manifest, fields);
        Fingerprint fp = fingerprint(L);
        r.line("field: " + L.field().describe());
        r.line("dim: " + std::to_string(L.dim()));
        r.line("jacobi: ok");
        std::string fps = to_string(fp);
        while (!fps.empty() && fps.back() == '\n') fps.pop_back();
        r.line("fingerprint: " + fps);
        r.data["jacobi"] = true;
        r.data["fingerprint"] = fps;
        r.data["algebra"] = algebra_json(L, fields);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::JacobiFailure) throw;
        r.code = Refuted;
        r.line("jacobi: fails");
        r.line(e.what());
        r.data["jacobi"] = false;
        r.data["message"] = e.what();
      }
    } else if (command == "conjugate") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      Automorphism s = resolve_sigma(L.field(), sigma);
      LieAlgebra C = conjugate(L, s).algebra;
      r.line("conjugate by " + s.name() + " over " + s.fixed_level().describe());
      r.table(C);
      r.data["sigma"] = s.name();
      r.data["algebra"] = algebra_json(C, fields);
    } else if (command == "restrict") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      FieldTower F = resolve_level(L, level, fields);
      Restriction R = restrict_scalars(L, F);
      r.line("dim: " + std::to_string(R.algebra.dim()) + " over " + F.describe());
      r.table(R.algebra);
      r.data["algebra"] = algebra_json(R.algebra, fields);
    } else if (command == "extend") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      FieldTower E = fields.resolve(level);
      LieAlgebra X = extend_scalars(L, E);
      r.line("dim: " + std::to_string(X.dim()) + " over " + E.describe());
      r.table(X);
      r.data["algebra"] = algebra_json(X, fields);
    } else if (command == "verify-sumconjugate") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      FieldTower F = resolve_level(L, level, fields);
      SumConjugateCheck c = verify_sumconjugate(L, F);
      r.code = c.verified ? Success : Refuted;
      r.line("matrix: " + std::to_string(c.matrix.rows()) + "x" + std::to_string(c.matrix.cols()) + " over " +
             L.field().describe());
      r.line(std::string("verified: ") + (c.verified ? "yes" : "no"));
      r.data["verified"] = c.verified;
    } else if (command == "decompose") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      if (!level.empty()) L = restrict_scalars(L, resolve_level(L, level, fields)).algebra;
      Decomposition d = decompose_indecomposable(L);
      json parts = json::array();
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        const auto& s = d.summands[i];
        std::string basis;
        for (const auto& l : s.algebra.labels()) basis += (basis.empty() ? "" : ", ") + l;
        r.line("summand " + std::to_string(i + 1) + " (dim " + std::to_string(s.algebra.dim()) + ", " +
               to_string(s.certificate) + ": " + s.reason + "): " + basis);
        parts.push_back({{"basis", s.algebra.labels()},
                         {"certificate", to_string(s.certificate)},
                         {"reason", s.reason},
                         {"algebra", algebra_json(s.algebra, fields)}});
      }
      r.code = d.all_certified() ? Success : Undecided;
      r.data["summands"] = parts;
    } else if (command == "pfaffian") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      PfaffianForm f = pfaffian_form(L);
      std::string type = "(" + std::to_string(f.split.p) + "," + std::to_string(f.split.q) + ")";
      r.line("type: " + type);
      r.line("f = " + f.poly.to_string());
      r.data["type"] = {f.split.p, f.split.q};
      r.data["form"] = f.poly.to_string();
    } else if (command == "invariant-c") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      try {
        FieldElement c = invariant_c(L);
        r.line(c.to_string());
        r.data["c"] = c.to_string();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TVanishes) throw;
        r.code = Undecided;
        r.line("inapplicable: T vanishes");
        r.data["c"] = nullptr;
        r.data["verdict"] = "inapplicable";
      }
    } else if (command == "count-forms") {
      LieAlgebra L = resolve_algebra(alg, manifest, fields);
      FieldTower F = resolve_level(L, level, fields);
      FormCount c = count_forms(L, F);
      r.line(std::to_string(c.count));
      json ws = json::array();
      for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
        std::string parts;
        for (const auto& p : c.witnesses[i].parts) parts += (parts.empty() ? "" : " + ") + p;
        r.line("witness " + std::to_string(i + 1) + ": " + parts);
        ws.push_back({{"parts", c.witnesses[i].parts}, {"algebra", algebra_json(c.witnesses[i].algebra, fields)}});
      }
      r.data["count"] = c.count;
      r.data["witnesses"] = ws;
    } else if (command == "catalog") {
      FieldTower F = fields.resolve(field);
      if (fam == "overFprop") {
        if (level.empty()) level = "Q";
        FieldTower base = fields.resolve(level);
        if (!F.has_level(base)) throw Error(ErrorKind::NotSubLevel, level + " is not a level of " + F.describe());
        OverFWitness w = overFprop_witness(base, base.parse(a_param), F.parse(lambda));
        r.code = w.verified ? Success : Refuted;
        r.line("Y basis:");
        r.table(w.y_algebra);
        r.line("X basis:");
        for (std::size_t c = 0; c < 3; ++c)
          r.line("X" + std::to_string(c + 1) + " = " + w.y_algebra.format(w.x_in_y.column(c)));
        r.table(w.x_algebra);
        r.line(std::string("verified: ") + (w.verified ? "yes" : "no"));
        r.data["verified"] = w.verified;
        r.data["conj_lambda"] = w.conj_lambda.to_string();
        r.data["algebra"] = algebra_json(w.x_algebra, fields);
      } else {
        std::vector<std::string> params;
        if (fam == "abelian") params = {std::to_string(n)};
        if (fam == "g_lambda" || fam == "r3_lambda" || fam == "r3_lambda_plus_abelian" || fam == "g" || fam == "r3" ||
            fam == "r3a")
          params = {lambda};
        if (fam == "g1_alpha" || fam == "g1") params = {alpha};
        if (fam == "nintot") params = {lambda, std::to_string(k), std::to_string(j)};
        for (const auto& p : params)
          if (p.empty()) throw Error(ErrorKind::Parse, "missing parameter for family '" + fam + "'");
        LieAlgebra L = family(fam, params, F);
        r.line(fam + " over " + F.describe() + ", dim " + std::to_string(L.dim()));
        r.table(L);
        r.data["algebra"] = algebra_json(L, fields);
      }
    } else if (command == "match") {
      LieAlgebra A = resolve_algebra(alg, manifest, fields);
      LieAlgebra B = resolve_algebra(alg2, manifest, fields);
      Decomposition da = decompose_indecomposable(A), db = decompose_indecomposable(B);
      MatchResult m =
          krull_schmidt_match(da, db, [](const LieAlgebra& x, const LieAlgebra& y) { return iso_oracle(x, y); });
      r.line(iso_word(m.verdict));
      json pairs = json::array();
      for (const auto& [x, y] : m.pairing) {
        r.line("summand " + std::to_string(x + 1) + " <-> summand " + std::to_string(y + 1));
        pairs.push_back({x + 1, y + 1});
      }
      r.code = m.verdict == IsoVerdict::Isomorphic ? Success
               : m.verdict == IsoVerdict::NotIsomorphic ? Refuted
                                                         : Undecided;
      r.data["verdict"] = iso_word(m.verdict);
      r.data["pairing"] = pairs;
    }
  } catch (const Error& e) {
    r.code = exit_for(e.kind());
    r.lines = {std::string(r.code == Undecided ? "unknown: " : "error: ") + e.what()};
    r.data["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (r.code == InputError && !as_json) {
      err << r.lines.front() << "\n";
      return r.code;
    }
  }
  r.data["exit"] = r.code;
  if (as_json) {
    out << r.data.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) out << l << "\n";
  }
  return r.code;
}

}  // namespace galoislie
