#pragma once

#include <string>
#include <utility>
#include <vector>

namespace balcat {

/// Outcome of one verification step. A failed check names the violated
/// instance in `detail`.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// An ordered list of checks with an overall verdict.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back(Check{std::move(name), passed, std::move(detail)});
  }
  void add(Check c) { checks_.push_back(std::move(c)); }
  void merge(const CheckReport& other) {
    for (const auto& c : other.checks_) {
      checks_.push_back(Check{other.title_.empty() ? c.name : other.title_ + "/" + c.name,
                              c.passed, c.detail});
    }
  }

  bool passed() const {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }
  /// First failing check, or nullptr.
  const Check* first_failure() const {
    for (const auto& c : checks_) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace balcat
