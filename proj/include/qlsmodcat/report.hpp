#pragma once

#include <string>

#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/serialize.hpp"

namespace qlsmodcat {

Json classification_to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const QlsDatum& d, const Json& j);
/// Aligned columns grouped by (F, psi-class, W), then a totals line.
std::string classification_to_text(const ClassificationReport& r);

/// "J2 M1+M1", "J0 M2", or "J0 not split".
std::string blocks_to_string(const SimpleModulesResult& s);

Simplicity simplicity_from_string(const std::string& s);

}  // namespace qlsmodcat
