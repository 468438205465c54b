#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "balcat/balanced/balanced.hpp"
#include "json.hpp"

namespace balcat {

/// Unreadable or malformed command-line input. The message starts with
/// "path:line:col:" when the problem is a JSON syntax error.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  /// Runs one check; an exception fails it with the exception text.
  void run(const std::string& name, const std::function<CheckReport()>& body);
  void add(std::string name, bool ok, std::string detail) {
    checks.push_back(Check{std::move(name), ok, std::move(detail)});
  }
  /// Everything but "timing" is a function of the inputs.
  nlohmann::json to_json(bool with_timing = true) const;
  /// A few lines for stderr.
  std::string summary() const;
};

nlohmann::json load_json_file(const std::string& path);

/// cyclic:n, symmetric:n or a group file.
GroupPtr load_group(const std::string& source);
/// Q or Fp:p.
Field parse_field(const std::string& source);
/// group-algebra, unit or a graded algebra file over the given group and field.
AlgebraObjectPtr load_algebra_object(const std::string& source, const GroupPtr& k, const Field& f);
/// regular, zero or a module object file.
GradedModuleObject load_module_object(const std::string& source, const AlgebraObjectPtr& a, Side side);

/// Splitting policy for the built-in algebras: F_p splits K when p does not
/// divide |K| and p = 1 mod exp(K); Q is taken to split symmetric groups and
/// groups of exponent at most 2.
bool default_splitting(const std::string& group_source, const FiniteGroup& k, const Field& f);

enum class Scope { linalg, algebra, graded, modcat, balanced, all };
std::optional<Scope> parse_scope(const std::string& text);
const char* scope_name(Scope s);

struct VerifyOptions {
  Scope scope = Scope::all;
  std::uint64_t seed = 1;
  /// Corrupts one structure constant of the reference algebra k[Z2].
  bool inject_fault = false;
};
RunReport cmd_verify(const VerifyOptions& opt);

struct ProductOptions {
  std::string group = "cyclic:2";
  std::string field = "Q";
  std::string algebra_a = "group-algebra";
  std::string algebra_b = "group-algebra";
  /// "auto", "yes" or "no"; auto applies default_splitting to built-in
  /// algebras and refuses to count for files.
  std::string splitting = "auto";
  std::uint64_t seed = 1;
  std::size_t sweep = 10;
};
RunReport cmd_balanced_product(const ProductOptions& opt);

struct HomcheckOptions {
  std::string group = "cyclic:2";
  std::string field = "Q";
  std::string algebra_a = "group-algebra";
  std::string algebra_b = "group-algebra";
  std::string x = "regular", x2 = "regular", y = "regular", y2 = "regular";
};
RunReport cmd_homcheck(const HomcheckOptions& opt);

}  // namespace balcat
