#include "balcat/gradedcat/io.hpp"

#include "balcat/algebra/io.hpp"
#include "balcat/common/errors.hpp"

namespace balcat {

using nlohmann::json;

namespace {

std::vector<std::size_t> grades_from_json(const json& j, std::size_t n, const FiniteGroup& k) {
  if (!j.is_array() || j.size() != n) {
    throw ValidationError("\"grades\" must list " + std::to_string(n) + " group elements");
  }
  std::vector<std::size_t> grades;
  for (const auto& g : j) {
    if (!g.is_number_unsigned() || g.get<std::size_t>() >= k.order()) {
      throw ValidationError("grade " + g.dump() + " is not an element of " + k.name());
    }
    grades.push_back(g.get<std::size_t>());
  }
  return grades;
}

}  // namespace

GradedAlgebraObject graded_algebra_from_json(const json& j, const GroupPtr& k) {
  FinAlgebra a = algebra_from_json(j);
  if (!j.contains("grades")) throw ValidationError("graded algebra lacks \"grades\"");
  auto grades = grades_from_json(j.at("grades"), a.dim(), *k);
  return GradedAlgebraObject(GradedObject(k, std::move(grades)), share(std::move(a)));
}

json graded_algebra_to_json(const GradedAlgebraObject& a) {
  json j = algebra_to_json(a.algebra());
  j["grades"] = a.object().grades();
  return j;
}

GradedModuleObject module_object_from_json(const json& j, const AlgebraObjectPtr& a) {
  if (!j.is_object()) throw ValidationError("module object document must be an object");
  for (const char* key : {"side", "grades", "action"}) {
    if (!j.contains(key)) {
      throw ValidationError(std::string("module object lacks \"") + key + "\"");
    }
  }
  const std::string side_text = j.at("side").is_string() ? j.at("side").get<std::string>() : "";
  if (side_text != "left" && side_text != "right") {
    throw ValidationError("\"side\" must be \"left\" or \"right\"");
  }
  const Side side = side_text == "left" ? Side::left : Side::right;
  const json& gj = j.at("grades");
  if (!gj.is_array()) throw ValidationError("\"grades\" must be an array");
  const std::size_t n = gj.size();
  auto grades = grades_from_json(gj, n, a->group());
  const json& aj = j.at("action");
  if (!aj.is_array() || aj.size() != a->dim()) {
    throw ValidationError("\"action\" must hold one matrix per algebra basis element (" +
                          std::to_string(a->dim()) + ")");
  }
  std::vector<Matrix> action;
  for (const auto& m : aj) action.push_back(matrix_from_json(a->field(), m, n, n));
  GradedModuleObject m(a, side, GradedObject(a->group_ptr(), std::move(grades)), std::move(action));
  const CheckReport report = validate_module_object(m);
  if (!report.passed()) {
    const Check* c = report.first_failure();
    throw ValidationError("module object fails " + c->name +
                          (c->detail.empty() ? "" : ": " + c->detail));
  }
  return m;
}

json module_object_to_json(const GradedModuleObject& m) {
  json action = json::array();
  for (const auto& a : m.module().actions()) action.push_back(matrix_to_json(a));
  return json{{"side", side_name(m.side())}, {"grades", m.object().grades()}, {"action", action}};
}

}  // namespace balcat
