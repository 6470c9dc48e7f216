#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ordo/cones.hpp"
#include "ordo/group.hpp"
#include "ordo/order.hpp"

namespace ordo {

class ExtensionError : public std::runtime_error {
 public:
  enum class Kind { invalid_rset, incomplete_rset, torsion, no_extreme_point, window_too_large, budget };

  ExtensionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A prescription of which of g, g^-1 comes first: id is never in R and R
/// holds at most one element of each inverse pair.
class RSet {
 public:
  RSet(GroupSpec group, std::vector<Element> elements);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  bool contains(const Element& g) const;
  /// True iff R meets every inverse pair {g, g^-1} of non-identity window elements.
  bool covers(const Window& window) const;

 private:
  GroupSpec group_;
  std::vector<Element> elements_;
};

/// The canonically least element of each inverse pair.
RSet canonical_rset(const Window& window);
/// The positive element of each inverse pair.
RSet rset_from_cone(const Window& window, const LeftOrderCone& cone);
/// Each pair independently: g, g^-1 or neither (or never neither when
/// `full_coverage`).
RSet random_rset(const Window& window, std::mt19937_64& rng, bool full_coverage = false);

struct ExtensionProblem {
  Window window;
  RSet r;
  bool require_total = false;
};

/// Builds an order satisfying, on the window S,
///   (i)  g, h g, h^-1 g in S with h != id  =>  g < h g or g < h^-1 g;
///   (ii) g < g^-1 iff g in R;
/// by repeatedly removing the canonically least extreme point a together
/// with a^-1 and placing both above everything that remains.
OrderTable peel_solve(const ExtensionProblem& problem);

struct BacktrackResult {
  std::optional<OrderTable> table;  // nullopt: search exhausted, UNSAT
  std::uint64_t nodes = 0;
  bool sat() const { return table.has_value(); }
};

/// Exhaustive search over pair orientations with transitive and clause
/// propagation. Independent of peel_solve.
BacktrackResult backtrack_solve(const ExtensionProblem& problem, std::size_t window_cap = 12,
                                std::uint64_t node_budget = 50'000'000);

struct ExtensionValidation {
  OrderValidation order;
  std::vector<std::tuple<Element, Element, Element>> condition_i;  // (g, h g, h^-1 g)
  std::vector<Element> condition_ii;
  std::optional<std::pair<Element, Element>> totality;  // set only if totality was required

  bool ok() const { return order.ok() && condition_i.empty() && condition_ii.empty() && !totality; }
};

ExtensionValidation validate_solution(const OrderTable& table, const ExtensionProblem& problem);

struct TowerReport {
  std::vector<int> radii;
  std::vector<OrderTable> tables;
  std::vector<bool> coherent;  // coherent[i]: tables[i+1] restricted to ball i equals tables[i]
  bool all_coherent() const;
};

TowerReport tower_solve(const GroupSpec& group, const std::vector<int>& radii, const RSet& r, bool require_total);

}  // namespace ordo
