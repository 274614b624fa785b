#ifndef GALOISLIE_MANIFEST_HPP
#define GALOISLIE_MANIFEST_HPP

#include <string>
#include <utility>
#include <vector>

#include "galoislie/field.hpp"
#include "galoislie/lie_algebra.hpp"

namespace galoislie {

/// Named fields and algebras read from a line-oriented file: one JSON object
/// per line, blank lines and lines starting with '#' ignored.
///
///   {"name": "K", "base": "Q", "generator": "t", "minpoly": ["1", "0", "1"],
///    "automorphisms": [["0", "1"], ["0", "-1"]], "automorphism_names": [...]}
///   {"name": "L", "field": "K", "dim": 3, "labels": [...],
///    "brackets": [{"i": 1, "j": 2, "k": 3, "coeff": "t"}]}
///
/// Coefficients are strings parsed in the base field (minpoly, constant term
/// first; automorphisms as coordinates of the generator's image) or in the
/// algebra's field (brackets). Indices are 1-based with i < j.
struct RejectedAlgebra {
  std::string name;
  std::string reason;  // the JacobiFailure message
  std::string entry;   // the original line, re-emitted by serialize_manifest
};

struct Manifest {
  std::vector<std::pair<std::string, FieldTower>> fields;
  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  /// Algebra entries whose brackets fail the Jacobi identity. They are kept
  /// so that looking them up reports the failure instead of the whole file
  /// being refused.
  std::vector<RejectedAlgebra> rejected;

  const FieldTower* field(const std::string& name) const;
  const LieAlgebra* algebra(const std::string& name) const;
  const RejectedAlgebra* rejected_algebra(const std::string& name) const;
  /// Name under which a field is registered ("Q" for the rationals).
  std::string field_name(const FieldTower& f) const;
};

/// Throws Parse on malformed input, UnknownName on dangling references and
/// whatever the field or algebra constructors raise.
Manifest parse_manifest(const std::string& text);
/// Canonical form: fields then algebras, one object per line, sorted keys.
std::string serialize_manifest(const Manifest& m);

}  // namespace galoislie

#endif
