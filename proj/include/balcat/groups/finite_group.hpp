#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace balcat {

/// A finite group stored as its full multiplication table over element
/// indices 0..n-1. Construction validates every group axiom exhaustively.
class FiniteGroup {
 public:
  using Element = std::size_t;

  /// Z/n with element k representing k (mod n).
  static FiniteGroup cyclic(std::size_t n);
  /// S_n for 1 <= n <= 5, elements are permutations of {0..n-1} in
  /// lexicographic order (index 0 = identity) and (st)(i) = s(t(i)).
  static FiniteGroup symmetric(std::size_t n);
  /// Throws ValidationError naming the first failed axiom.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::string name = {});
  /// {"order": n, "table": [[...]]}, validated.
  static FiniteGroup from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  const std::string& name() const { return name_; }

  bool is_abelian() const;
  std::size_t element_order(Element g) const;
  /// Least common multiple of the element orders.
  std::size_t exponent() const;
  /// Orbits of the conjugation action, by exhaustive enumeration; classes are
  /// listed by smallest member.
  std::vector<std::vector<Element>> conjugacy_classes() const;
  std::size_t conjugacy_class_count() const { return conjugacy_classes().size(); }

  /// Same multiplication table.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }
  friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::string name_;
};

}  // namespace balcat
