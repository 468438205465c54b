#pragma once

#include "balcat/gradedcat/objects.hpp"
#include "json.hpp"

namespace balcat {

/// The algebra format plus "grades": one group element index per basis vector.
GradedAlgebraObject graded_algebra_from_json(const nlohmann::json& j, const GroupPtr& k);
nlohmann::json graded_algebra_to_json(const GradedAlgebraObject& a);

/// {"side": "left"|"right", "grades": [...], "action": [one dim x dim matrix
/// per algebra basis element]}. The "algebra" entry, if any, is resolved by
/// the caller and passed in. Throws ValidationError on malformed input or
/// failed module axioms.
GradedModuleObject module_object_from_json(const nlohmann::json& j, const AlgebraObjectPtr& a);
nlohmann::json module_object_to_json(const GradedModuleObject& m);

}  // namespace balcat
