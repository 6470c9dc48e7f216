#include "ordo/order.hpp"

#include <deque>

namespace ordo {

Comparison flip(Comparison c) {
  switch (c) {
    case Comparison::less:
      return Comparison::greater;
    case Comparison::greater:
      return Comparison::less;
    case Comparison::incomparable:
      return Comparison::incomparable;
  }
  return c;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::less:
      return "less";
    case Comparison::greater:
      return "greater";
    case Comparison::incomparable:
      return "incomparable";
  }
  return "";
}

OrderTable::OrderTable(Window window) : window_(std::move(window)), rel_(window_.size() * window_.size(), 0) {}

OrderTable::OrderTable(Window window, const std::vector<std::pair<Element, Element>>& pairs)
    : OrderTable(std::move(window)) {
  for (const auto& [g, h] : pairs) add(g, h);
}

std::size_t OrderTable::index(const Element& g) const {
  auto i = window_.index_of(g);
  if (!i) throw GroupError("element " + window_.group().encode(g) + " is outside the window");
  return *i;
}

bool OrderTable::less(const Element& g, const Element& h) const { return less(index(g), index(h)); }

void OrderTable::add(const Element& g, const Element& h) { set_less(index(g), index(h)); }

std::vector<std::pair<Element, Element>> OrderTable::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(window_[i], window_[j]);
  return out;
}

std::size_t OrderTable::pair_count() const { return static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), 1)); }

OrderTable OrderTable::restricted_to(const Window& sub) const {
  OrderTable out(sub);
  std::vector<std::size_t> map;
  map.reserve(sub.size());
  for (const auto& g : sub) map.push_back(index(g));
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) out.set_less(i, j, less(map[i], map[j]));
  return out;
}

OrderValidation validate_strict_partial_order(const OrderTable& t) {
  OrderValidation report;
  const std::size_t n = t.size();
  const auto& w = t.window();
  for (std::size_t i = 0; i < n; ++i) {
    if (t.less(i, i)) report.irreflexivity.push_back(w[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (t.less(i, j) && t.less(j, i)) report.asymmetry.emplace_back(w[i], w[j]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.less(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (t.less(j, k) && !t.less(i, k)) report.transitivity.emplace_back(w[i], w[j], w[k]);
    }
  return report;
}

OrderTable transitive_closure(const OrderTable& t) {
  const std::size_t n = t.size();
  OrderTable out = t;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.less(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (out.less(k, j)) out.set_less(i, j);
    }
  for (std::size_t start = 0; start < n; ++start) {
    if (!out.less(start, start)) continue;
    // Shortest walk back to `start` through the original relation.
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{start};
    std::optional<std::size_t> last;
    while (!queue.empty() && !last) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (!t.less(u, v)) continue;
        if (v == start) {
          last = u;
          break;
        }
        if (parent[v] == n) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    std::vector<Element> cycle{t.window()[start]};
    std::vector<std::size_t> path;
    for (auto u = *last; u != start; u = parent[u]) path.push_back(u);
    for (auto it = path.rbegin(); it != path.rend(); ++it) cycle.push_back(t.window()[*it]);
    cycle.push_back(t.window()[start]);
    std::string text = "relation has a cycle:";
    for (const auto& g : cycle) text += " " + t.window().group().encode(g);
    throw CycleError(std::move(cycle), text);
  }
  return out;
}

TotalityResult is_total(const OrderTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!t.less(i, j) && !t.less(j, i)) return {false, std::pair{t.window()[i], t.window()[j]}};
  return {};
}

OrderOracle order_from_positive(GroupSpec group, std::function<bool(const Element&)> positive, std::string name) {
  auto compare = [group, positive = std::move(positive)](const Element& g, const Element& h) {
    if (g == h) return Comparison::incomparable;
    return positive(group.compose(group.invert(g), h)) ? Comparison::less : Comparison::greater;
  };
  return OrderOracle{std::move(group), std::move(compare), std::move(name)};
}

std::vector<std::pair<Element, Element>> check_li_condition(const OrderOracle& order, const Window& window,
                                                            LiForm form) {
  const auto& group = window.group();
  std::vector<std::pair<Element, Element>> violations;
  for (const auto& g : window) {
    for (const auto& h : window) {
      if (group.is_identity(h)) continue;
      const Element h_inv = group.invert(h);
      const bool ok = form == LiForm::left
                          ? order.less(g, group.compose(h, g)) || order.less(g, group.compose(h_inv, g))
                          : order.less(g, group.compose(g, h)) || order.less(g, group.compose(g, h_inv));
      if (!ok) violations.emplace_back(g, h);
    }
  }
  return violations;
}

OrderOracle convert_convention(OrderOracle order) {
  const GroupSpec group = order.group;
  auto inner = std::move(order.compare);
  auto compare = [group, inner = std::move(inner)](const Element& g, const Element& h) {
    return inner(group.invert(g), group.invert(h));
  };
  return OrderOracle{group, std::move(compare), "converted(" + order.name + ")"};
}

std::optional<std::pair<Element, Element>> find_disagreement(const OrderOracle& first, const OrderOracle& second,
                                                             const Window& window) {
  if (!(first.group == second.group)) throw GroupError("orders are defined on different groups");
  for (const auto& g : window)
    for (const auto& h : window)
      if (first.compare(g, h) != second.compare(g, h)) return std::pair{g, h};
  return std::nullopt;
}

OrderTable tabulate(const OrderOracle& order, const Window& window) {
  OrderTable out(window);
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = 0; j < window.size(); ++j)
      if (i != j && order.less(window[i], window[j])) out.set_less(i, j);
  return out;
}

}  // namespace ordo
