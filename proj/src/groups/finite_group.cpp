#include "balcat/groups/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "balcat/common/errors.hpp"

namespace balcat {

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("symmetric group degree must be in 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<Element>(
          std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(t), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.name_ = name.empty() ? "G" + std::to_string(n) : std::move(name);
  g.table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw ValidationError("group table row " + std::to_string(a) + " has length " +
                            std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw ValidationError("group table entry (" + std::to_string(a) + "," +
                              std::to_string(b) + ") out of range");
      }
      g.table_.push_back(table[a][b]);
    }
  }
  // identity
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group table has no identity element");
  // inverses
  g.inverse_.assign(n, n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inverse_[x] = y;
        break;
      }
    }
    if (g.inverse_[x] == n) {
      throw ValidationError("element " + std::to_string(x) + " has no inverse");
    }
  }
  // associativity, exhaustively
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw ValidationError("group table is not associative at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
    throw ValidationError("group document needs \"order\" and \"table\"");
  }
  const auto order = j.at("order").get<std::size_t>();
  auto table = j.at("table").get<std::vector<std::vector<Element>>>();
  if (table.size() != order) {
    throw ValidationError("group table has " + std::to_string(table.size()) +
                          " rows but order is " + std::to_string(order));
  }
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string{};
  return from_table(std::move(table), std::move(name));
}

nlohmann::json FiniteGroup::to_json() const {
  std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  }
  return nlohmann::json{{"name", name_}, {"order", order_}, {"table", t}};
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  Element x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Element g = 0; g < order_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

std::vector<std::vector<FiniteGroup::Element>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(order_, false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < order_; ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < order_; ++g) {
      const Element y = mul(mul(g, x), inv(g));
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace balcat
