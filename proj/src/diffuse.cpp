#include "ordo/diffuse.hpp"

#include <algorithm>

namespace ordo {

namespace {

bool sorted_contains(const std::vector<Element>& sorted, const Element& g) {
  return std::binary_search(sorted.begin(), sorted.end(), g, CanonicalLess{});
}

// Index of a non-extreme witness s in `sorted`, or npos.
std::size_t find_witness(const Element& a, const std::vector<Element>& sorted, const GroupSpec& group) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& s = sorted[i];
    if (s == a) continue;
    if (sorted_contains(sorted, group.compose(group.compose(a, group.invert(s)), a))) return i;
  }
  return sorted.size();
}

}  // namespace

ExtremeCheck is_extreme(const Element& a, const std::vector<Element>& subset, const GroupSpec& group) {
  std::vector<Element> sorted = subset;
  canonicalize(sorted);
  if (!sorted_contains(sorted, a)) throw std::invalid_argument("candidate is not in the set");
  const auto i = find_witness(a, sorted, group);
  if (i == sorted.size()) return {};
  return {false, group.compose(sorted[i], group.invert(a))};
}

ExtremeReport extreme_points(std::vector<Element> subset, const GroupSpec& group) {
  if (subset.empty()) throw std::invalid_argument("extreme points of an empty set");
  canonicalize(subset);
  ExtremeReport report;
  for (const auto& a : subset) {
    const auto i = find_witness(a, subset, group);
    if (i == subset.size())
      report.extreme.push_back(a);
    else
      report.witnesses.emplace_back(a, group.compose(subset[i], group.invert(a)));
  }
  report.subset = std::move(subset);
  return report;
}

ScanReport diffuse_scan(const Window& window, std::size_t max_subset_size, std::uint64_t budget) {
  if (max_subset_size < 1) throw std::invalid_argument("max_subset_size must be at least 1");
  const auto& group = window.group();
  const std::size_t n = window.size();

  // a s^-1 a for every ordered pair, as window indices (n when outside).
  std::vector<std::size_t> reflect(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t s = 0; s < n; ++s) {
      if (a == s) continue;
      const auto r = window.index_of(group.compose(group.compose(window[a], group.invert(window[s])), window[a]));
      reflect[a * n + s] = r.value_or(n);
    }

  ScanReport report;
  std::vector<unsigned char> member(n, 0);
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= std::min(max_subset_size, n); ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (report.checked >= budget) {
        report.budget_exhausted = true;
        return report;
      }
      ++report.checked;
      for (auto i : pick) member[i] = 1;
      const bool has_extreme = std::any_of(pick.begin(), pick.end(), [&](std::size_t a) {
        return std::none_of(pick.begin(), pick.end(), [&](std::size_t s) {
          const auto r = reflect[a * n + s];
          return s != a && r < n && member[r];
        });
      });
      for (auto i : pick) member[i] = 0;
      if (!has_extreme) {
        std::vector<Element> subset;
        for (auto i : pick) subset.push_back(window[i]);
        report.counterexample = std::move(subset);
        return report;
      }
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return report;
}

}  // namespace ordo
