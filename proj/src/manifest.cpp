#include "galoislie/manifest.hpp"

#include <sstream>

#include "galoislie/error.hpp"
#include "galoislie/polynomial.hpp"
#include "json.hpp"

namespace galoislie {

using nlohmann::json;

const FieldTower* Manifest::field(const std::string& name) const {
  for (const auto& [n, f] : fields)
    if (n == name) return &f;
  return nullptr;
}

const LieAlgebra* Manifest::algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return &a;
  return nullptr;
}

const RejectedAlgebra* Manifest::rejected_algebra(const std::string& name) const {
  for (const auto& r : rejected)
    if (r.name == name) return &r;
  return nullptr;
}

std::string Manifest::field_name(const FieldTower& f) const {
  if (f.is_rationals()) return "Q";
  for (const auto& [n, g] : fields)
    if (g == f) return n;
  throw Error(ErrorKind::UnknownName, "field " + f.describe() + " is not registered");
}

namespace {

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw Error(ErrorKind::Parse, std::string("missing string key '") + key + "'");
  return j[key].get<std::string>();
}

std::vector<std::string> get_strings(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(ErrorKind::Parse, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::size_t get_index(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < 1)
    throw Error(ErrorKind::Parse, std::string("key '") + key + "' must be a positive integer");
  return j[key].get<std::size_t>();
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto lookup_field = [&](const std::string& name) {
    if (name == "Q") return FieldTower::rationals();
    if (const auto* f = m.field(name)) return *f;
    throw Error(ErrorKind::UnknownName, "unknown field '" + name + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected an object");
    std::string name = get_string(j, "name");
    if (m.field(name) || m.algebra(name) || m.rejected_algebra(name) || name == "Q")
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": duplicate name '" + name + "'");

    if (j.contains("minpoly")) {
      FieldTower base = lookup_field(get_string(j, "base"));
      std::vector<FieldElement> coeffs;
      for (const auto& s : get_strings(j["minpoly"])) coeffs.push_back(base.parse(s));
      std::vector<std::vector<FieldElement>> images;
      if (j.contains("automorphisms")) {
        if (!j["automorphisms"].is_array()) throw Error(ErrorKind::Parse, "automorphisms must be an array");
        for (const auto& a : j["automorphisms"]) {
          std::vector<FieldElement> img;
          for (const auto& s : get_strings(a)) img.push_back(base.parse(s));
          images.push_back(std::move(img));
        }
      }
      std::vector<std::string> names;
      if (j.contains("automorphism_names")) names = get_strings(j["automorphism_names"]);
      std::string gen = j.contains("generator") ? get_string(j, "generator") : name;
      m.fields.emplace_back(name, FieldTower::extend(base, Polynomial(base, coeffs), gen, images, names));
    } else if (j.contains("dim")) {
      FieldTower F = lookup_field(get_string(j, "field"));
      std::size_t dim = get_index(j, "dim");
      std::vector<StructureConstant> cs;
      if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw Error(ErrorKind::Parse, "brackets must be an array");
        for (const auto& b : j["brackets"]) {
          std::size_t i = get_index(b, "i"), jj = get_index(b, "j"), k = get_index(b, "k");
          if (i >= jj) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bracket needs i < j");
          if (jj > dim || k > dim) throw Error(ErrorKind::IndexRange, "bracket index exceeds dim");
          cs.push_back({i - 1, jj - 1, k - 1, F.parse(get_string(b, "coeff"))});
        }
      }
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = get_strings(j["labels"]);
      try {
        m.algebras.emplace_back(name, LieAlgebra(F, dim, cs, labels));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::JacobiFailure) throw;
        std::string reason = e.what();
        std::string prefix = std::string(to_string(ErrorKind::JacobiFailure)) + ": ";
        if (reason.rfind(prefix, 0) == 0) reason.erase(0, prefix.size());
        m.rejected.push_back({name, reason, j.dump()});
      }
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": neither a field nor an algebra");
    }
  }
  return m;
}

std::string serialize_manifest(const Manifest& m) {
  std::string out;
  for (const auto& [name, F] : m.fields) {
    FieldTower base = F.base();
    json j;
    j["name"] = name;
    j["base"] = m.field_name(base);
    j["generator"] = F.generator_name();
    json mp = json::array();
    Polynomial minpoly = F.minpoly();
    for (const auto& c : minpoly.coeffs()) mp.push_back(c.to_string());
    j["minpoly"] = mp;
    json autos = json::array(), names = json::array();
    for (std::size_t k = 0; k < F.automorphism_count(); ++k) {
      json img = json::array();
      for (const auto& c : F.coords_over(F.automorphism_image(k), base)) img.push_back(c.to_string());
      autos.push_back(img);
      names.push_back(F.automorphism_name(k));
    }
    j["automorphisms"] = autos;
    j["automorphism_names"] = names;
    out += j.dump() + "\n";
  }
  for (const auto& [name, L] : m.algebras) {
    json j;
    j["name"] = name;
    j["field"] = m.field_name(L.field());
    j["dim"] = L.dim();
    j["labels"] = L.labels();
    json br = json::array();
    for (const auto& c : L.constants())
      br.push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"k", c.k + 1}, {"coeff", c.value.to_string()}});
    j["brackets"] = br;
    out += j.dump() + "\n";
  }
  for (const auto& r : m.rejected) out += r.entry + "\n";
  return out;
}

}  // namespace galoislie
