#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlsmodcat/deformation.hpp"

namespace qlsmodcat {

using Json = nlohmann::ordered_json;

/// {"L": conductor, "c": ["p/q", ...]} at the least conductor. Input also
/// accepts an integer or a rational string.
Json scalar_to_json(const CycloNumber& x);
CycloNumber scalar_from_json(const Json& j, const std::string& path = "");

/// Sparse vector as [[index, scalar], ...].
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const std::string& path = "");

/// The input document: a datum with optional lifting, modcat and extra W.
struct InputDocument {
  std::string name;
  QlsDatum datum;
  std::optional<LiftingDatum> lifting;
  std::optional<ModCatDatum> modcat;
  std::vector<std::vector<Vec>> extra_W;
};

/// Parses and schema-checks; ParseError with line/column or a JSON pointer.
InputDocument parse_input(const std::string& text);
Json input_to_json(const InputDocument& doc);

Json datum_to_json(const QlsDatum& d);
Json lifting_to_json(const LiftingDatum& l);
Json modcat_to_json(const ModCatDatum& m);
ModCatDatum modcat_from_json(const QlsDatum& d, const Json& j, const std::string& path = "/modcat");
Json subgroup_to_json(const Subgroup& F);

/// Parses text, with ParseError carrying line and column.
Json parse_json_text(const std::string& text);

/// Subset of draft-07: type, properties, required, additionalProperties,
/// items, minimum, pattern, oneOf, $ref into #/definitions. Returns the
/// first violation as "pointer: message".
std::optional<std::string> validate_schema(const Json& instance, const Json& schema);
const Json& input_schema();

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);
Json hopf_to_json(const HopfAlgebraRep& h);
HopfAlgebraRep hopf_from_json(const Json& j);
Json comodule_to_json(const ComoduleAlgebraRep& a);
ComoduleAlgebraRep comodule_from_json(const Json& j);
Json bigalois_to_json(const BiGaloisRep& b);
BiGaloisRep bigalois_from_json(const Json& j);

/// Compact, key-order-preserving text used for artifacts and hashing.
std::string dump_stable(const Json& j);

}  // namespace qlsmodcat
