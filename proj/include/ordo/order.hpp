#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordo/group.hpp"

namespace ordo {

enum class Comparison { less, greater, incomparable };

Comparison flip(Comparison c);
const char* to_string(Comparison c);

/// A strict partial order on the elements of a window, stored as a dense
/// relation matrix indexed by window position.
class OrderTable {
 public:
  explicit OrderTable(Window window);
  /// Throws GroupError if a pair mentions an element outside the window.
  OrderTable(Window window, const std::vector<std::pair<Element, Element>>& pairs);

  const Window& window() const noexcept { return window_; }
  std::size_t size() const noexcept { return window_.size(); }

  bool less(std::size_t i, std::size_t j) const { return rel_[i * size() + j] != 0; }
  bool less(const Element& g, const Element& h) const;
  void set_less(std::size_t i, std::size_t j, bool value = true) { rel_[i * size() + j] = value ? 1 : 0; }
  void add(const Element& g, const Element& h);

  /// All pairs (g, h) with g below h, in canonical order of (g, h).
  std::vector<std::pair<Element, Element>> pairs() const;
  std::size_t pair_count() const;

  /// The restriction of this table to a sub-window.
  OrderTable restricted_to(const Window& sub) const;

  friend bool operator==(const OrderTable& lhs, const OrderTable& rhs) {
    return lhs.window_.elements().size() == rhs.window_.elements().size() &&
           std::equal(lhs.window_.begin(), lhs.window_.end(), rhs.window_.begin()) && lhs.rel_ == rhs.rel_;
  }

 private:
  std::size_t index(const Element& g) const;

  Window window_;
  std::vector<unsigned char> rel_;
};

/// Violations of the strict-partial-order axioms. Empty iff valid.
struct OrderValidation {
  std::vector<Element> irreflexivity;
  std::vector<std::pair<Element, Element>> asymmetry;
  std::vector<std::tuple<Element, Element, Element>> transitivity;

  bool ok() const { return irreflexivity.empty() && asymmetry.empty() && transitivity.empty(); }
};

OrderValidation validate_strict_partial_order(const OrderTable& table);

/// Thrown by transitive_closure when the relation contains a cycle.
class CycleError : public std::runtime_error {
 public:
  CycleError(std::vector<Element> cycle, const std::string& what)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  /// The cycle as a closed walk g0, g1, ..., g0.
  const std::vector<Element>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Element> cycle_;
};

OrderTable transitive_closure(const OrderTable& table);

struct TotalityResult {
  bool total = true;
  std::optional<std::pair<Element, Element>> incomparable;
};

TotalityResult is_total(const OrderTable& table);

/// A global order on a group, given by a pure comparison function.
/// compare(g, g) is always incomparable.
struct OrderOracle {
  GroupSpec group;
  std::function<Comparison(const Element&, const Element&)> compare;
  std::string name;

  bool less(const Element& g, const Element& h) const { return compare(g, h) == Comparison::less; }
};

/// The left order g < h iff g^-1 h lies in the cone given by `positive`.
OrderOracle order_from_positive(GroupSpec group, std::function<bool(const Element&)> positive, std::string name);

/// Which form of the locally-invariant condition to test.
///   left:       g < h g  or  g < h^-1 g
///   literature: g < g h  or  g < g h^-1
enum class LiForm { left, literature };

/// For g in the window and h != id in the window, reports (g, h) when the
/// condition fails. Products are formed in the ambient group.
std::vector<std::pair<Element, Element>> check_li_condition(const OrderOracle& order, const Window& window,
                                                            LiForm form = LiForm::left);

/// g < h iff g^-1 < h^-1 in the input; swaps the left and literature forms.
OrderOracle convert_convention(OrderOracle order);

/// First (g, h) in canonical order at which the two oracles disagree.
std::optional<std::pair<Element, Element>> find_disagreement(const OrderOracle& first, const OrderOracle& second,
                                                             const Window& window);

/// The table of `order` restricted to the window.
OrderTable tabulate(const OrderOracle& order, const Window& window);

}  // namespace ordo
