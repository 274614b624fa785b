#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "doctest.h"
#include "galoislie/catalog.hpp"
#include "galoislie/cli.hpp"
#include "galoislie/error.hpp"
#include "galoislie/manifest.hpp"
#include "json.hpp"

using namespace galoislie;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kManifest =
    "# a tower and two algebras\n"
    R"({"name": "K", "base": "Q", "generator": "s", "minpoly": ["-2", "0", "1"], "automorphisms": [["0", "-1"]], "automorphism_names": ["flip"]})"
    "\n"
    R"({"name": "KI", "base": "K", "generator": "j", "minpoly": ["1", "0", "1"], "automorphisms": [["0", "-1"]]})"
    "\n"
    R"({"name": "heis", "field": "KI", "dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "coeff": "s*j"}]})"
    "\n"
    R"({"name": "bad", "field": "Q", "dim": 3, "brackets": [{"i": 1, "j": 2, "k": 1, "coeff": "1"}, {"i": 2, "j": 3, "k": 2, "coeff": "1"}, {"i": 1, "j": 3, "k": 3, "coeff": "1"}]})"
    "\n";

}  // namespace

TEST_CASE("invariant-c output and exit codes") {
  auto r = call({"invariant-c", "g[i]@Qi"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  auto s = call({"invariant-c", "g_lambda[1+1i]@Qi"});
  CHECK(s.code == 0);
  CHECK(s.out == "83/25 - 1113/50*i\n");
  auto t = call({"invariant-c", "g[1]@Qi"});
  CHECK(t.code == 3);
  CHECK(t.out.find("inapplicable") != std::string::npos);
  CHECK(call({"invariant-c", "h3@Qi"}).code == 2);
}

TEST_CASE("count-forms") {
  auto r = call({"count-forms", "g[1+i]@Qi", "--over", "Q"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "2");
  CHECK(r.out.find("witness 2: conj(S1)") != std::string::npos);
  auto h = call({"count-forms", "h3@Qi", "--over", "Q"});
  CHECK(h.code == 0);
  CHECK(first_line(h.out) == "1");
  CHECK(call({"count-forms", "g[i]@Qi", "--over", "Q"}).code == 3);
  CHECK(call({"count-forms", "g[i]@Qi", "--over", "Qsqrt2"}).code == 2);
}

TEST_CASE("decompose exit codes") {
  auto ok = call({"decompose", "h3 + h3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("summand 2") != std::string::npos);
  auto heur = call({"decompose", "h3@Qsqrt2(i)", "--over", "Qsqrt2"});
  CHECK(heur.code == 3);
  CHECK(heur.out.find("HeuristicIndecomposable") != std::string::npos);
}

TEST_CASE("check, conjugate, restrict, extend, pfaffian, verify-sumconjugate, catalog") {
  auto c = call({"check", "g[1+i]@Qi"});
  CHECK(c.code == 0);
  CHECK(c.out.find("type (8,2)") != std::string::npos);
  auto conj = call({"conjugate", "r3[i]@Qi", "--sigma", "conj"});
  CHECK(conj.code == 0);
  CHECK(conj.out.find("[X1,X3] = (-i)*X3") != std::string::npos);
  CHECK(call({"conjugate", "r3[i]@Qi", "--sigma", "nope"}).code == 2);
  auto res = call({"restrict", "h3@Qi", "--to", "Q"});
  CHECK(res.code == 0);
  CHECK(first_line(res.out) == "dim: 6 over Q");
  CHECK(call({"restrict", "h3@Qi", "--to", "Qsqrt2"}).code == 2);
  CHECK(call({"extend", "h3", "--to", "Qzeta5"}).code == 0);
  CHECK(call({"extend", "h3@Qi", "--to", "Qsqrt2"}).code == 2);
  auto pf = call({"pfaffian", "g[1+i]@Qi"});
  CHECK(pf.code == 0);
  CHECK(pf.out.find("f = x^4 + (1 + i)*x^2*y^2 + y^4") != std::string::npos);
  CHECK(call({"pfaffian", "r3[2]"}).code == 2);
  CHECK(call({"verify-sumconjugate", "g[1+i]@Qi", "--over", "Q"}).code == 0);
  CHECK(call({"verify-sumconjugate", "abelian[3]@Qsqrt2", "--over", "Q"}).code == 0);
  auto cat = call({"catalog", "g_lambda", "--field", "Qi", "--lambda", "1+1i"});
  CHECK(cat.code == 0);
  CHECK(cat.out.find("[X2,X7] = (-1 - i)*Z2") != std::string::npos);
  CHECK(call({"catalog", "overFprop", "--field", "Qi", "--a", "0", "--lambda", "i"}).code == 0);
  CHECK(call({"catalog", "overFprop", "--field", "Qi", "--a", "2", "--lambda", "i"}).code == 2);
  CHECK(call({"catalog", "g1_alpha", "--alpha", "0"}).code == 2);
  CHECK(call({"catalog", "nintot", "--field", "Qi", "--lambda", "1+i", "--k", "2", "--j", "1"}).code == 0);
}

TEST_CASE("match") {
  CHECK(call({"match", "g[1+i]@Qi + g[1-i]@Qi", "2*g[1+i]@Qi"}).code == 1);
  CHECK(call({"match", "g[1+i]@Qi + g[1-i]@Qi", "g[1-i]@Qi + g[1+i]@Qi"}).code == 0);
  CHECK(call({"match", "r3[2]", "r3[1/2]"}).code == 3);
}

TEST_CASE("input errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check", "nosuch[1]"}).code == 2);
  CHECK(call({"check", "h3@Qcube"}).code == 2);
  CHECK(call({"check", "g[1+]@Qi"}).code == 2);
  CHECK(call({"check", "h3@Q + h3@Qi"}).code == 2);
  CHECK(call({"check", "h3", "--manifest", "/nonexistent/file"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json reports") {
  auto r = call({"--json", "count-forms", "2*g[1+i]@Qi", "--over", "Q"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["exit"] == 0);
  CHECK(j["witnesses"].size() == 3);
  auto e = call({"invariant-c", "g[1]@Qi", "--json"});
  CHECK(nlohmann::json::parse(e.out)["verdict"] == "inapplicable");
  auto bad = call({"check", "nosuch", "--json"});
  CHECK(bad.code == 2);
  CHECK(nlohmann::json::parse(bad.out)["error"]["kind"] == "UnknownName");
}

TEST_CASE("manifest algebras from the command line") {
  auto path = write_temp("galoislie_test_manifest.jsonl", kManifest);
  auto heis = call({"--manifest", path, "check", "heis"});
  CHECK(heis.code == 0);
  CHECK(heis.out.find("dim: 3") != std::string::npos);
  auto bad = call({"--manifest", path, "check", "bad"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("Jacobi identity fails") != std::string::npos);
  auto dec = call({"--manifest", path, "decompose", "heis", "--over", "K"});
  CHECK(dec.code == 3);
  auto conj = call({"--manifest", path, "conjugate", "heis", "--sigma", "s1|flip"});
  CHECK(conj.code == 0);
}

TEST_CASE("manifest round trip") {
  std::string text(kManifest);
  text = text.substr(0, text.find("{\"name\": \"bad\""));
  Manifest m = parse_manifest(text);
  REQUIRE(m.fields.size() == 2);
  REQUIRE(m.algebras.size() == 1);
  std::string canon = serialize_manifest(m);
  Manifest again = parse_manifest(canon);
  CHECK(serialize_manifest(again) == canon);
  CHECK(again.algebras[0].second.constants().size() == 1);
  CHECK(again.fields[1].second.describe() == "Q(s)(j)");

  Manifest full = parse_manifest(kManifest);
  REQUIRE(full.rejected.size() == 1);
  CHECK(full.rejected[0].reason.find("Jacobi identity fails") != std::string::npos);
  Manifest full_again = parse_manifest(serialize_manifest(full));
  CHECK(full_again.rejected.size() == 1);
  CHECK(serialize_manifest(full_again) == serialize_manifest(full));

  Manifest built;
  auto Qi = FieldTower::quadratic(-1, "i");
  built.fields.emplace_back("Qi", Qi);
  built.algebras.emplace_back("g", g_lambda(Qi.parse("1+i")));
  built.algebras.emplace_back("r", r3_lambda(Qi.parse("-3/4+2i")));
  std::string s = serialize_manifest(built);
  Manifest back = parse_manifest(s);
  CHECK(back.algebras[0].second.constants().size() == built.algebras[0].second.constants().size());
  CHECK(serialize_manifest(back) == s);
}

TEST_CASE("manifest errors") {
  auto kind_of = [](const std::string& text) -> std::optional<ErrorKind> {
    try {
      parse_manifest(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of(R"({"name": "a", "field": "Q", "dim": 2, "brackets": [{"i": 2, "j": 1, "k": 1, "coeff": "1"}]})") ==
        ErrorKind::Parse);
  CHECK(kind_of(R"({"name": "a", "field": "nowhere", "dim": 2})") == ErrorKind::UnknownName);
  CHECK(kind_of("{not json") == ErrorKind::Parse);
  CHECK(kind_of(R"({"name": "F", "base": "Q", "minpoly": ["-1", "0", "1"]})") == ErrorKind::Reducible);
  CHECK(kind_of(R"({"name": "a", "field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 3, "k": 1, "coeff": "1"}]})") ==
        ErrorKind::IndexRange);
  CHECK(kind_of(R"({"name": "Q", "base": "Q", "minpoly": ["1", "0", "1"]})") == ErrorKind::Parse);
  CHECK_FALSE(kind_of("# only a comment\n\n").has_value());
}
