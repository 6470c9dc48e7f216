#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordo/group.hpp"

namespace ordo {

/// a is extreme in S when no h != id has both h a and h^-1 a in S.
/// Since h a in S forces h = s a^-1 for some s in S, this reduces to
/// a s^-1 a not in S for every s in S \ {a}.
struct ExtremeCheck {
  bool extreme = true;
  std::optional<Element> witness;  // h with h a, h^-1 a in S
};

/// Throws std::invalid_argument if a is not in S.
ExtremeCheck is_extreme(const Element& a, const std::vector<Element>& subset, const GroupSpec& group);

struct ExtremeReport {
  std::vector<Element> subset;  // canonical order
  std::vector<Element> extreme;
  std::vector<std::pair<Element, Element>> witnesses;  // (non-extreme a, h)
};

/// Throws std::invalid_argument on an empty set.
ExtremeReport extreme_points(std::vector<Element> subset, const GroupSpec& group);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanReport {
  std::uint64_t checked = 0;
  std::optional<std::vector<Element>> counterexample;
  bool budget_exhausted = false;
};

/// Enumerates nonempty subsets of the window by size, then canonical order,
/// stopping at the first subset without an extreme point. When more than
/// `budget` subsets would be visited the scan stops with budget_exhausted.
ScanReport diffuse_scan(const Window& window, std::size_t max_subset_size,
                        std::uint64_t budget = 10'000'000);

}  // namespace ordo
