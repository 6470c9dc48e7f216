#include "ordo/extend.hpp"

#include <algorithm>
#include <deque>

namespace ordo {

// ---------------------------------------------------------------------------
// RSet

RSet::RSet(GroupSpec group, std::vector<Element> elements) : group_(std::move(group)), elements_(std::move(elements)) {
  canonicalize(elements_);
  for (const auto& g : elements_) {
    if (!group_.contains(g)) throw ExtensionError(ExtensionError::Kind::invalid_rset, "R element outside the group");
    if (group_.is_identity(g))
      throw ExtensionError(ExtensionError::Kind::invalid_rset, "R must not contain the identity");
    if (contains(group_.invert(g)))
      throw ExtensionError(ExtensionError::Kind::invalid_rset,
                           "R contains both " + group_.encode(g) + " and its inverse");
  }
}

bool RSet::contains(const Element& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g, CanonicalLess{});
}

bool RSet::covers(const Window& window) const {
  return std::all_of(window.begin(), window.end(), [&](const Element& g) {
    return group_.is_identity(g) || contains(g) || contains(group_.invert(g));
  });
}

namespace {

// Non-identity elements that are canonically smaller than their inverse.
std::vector<Element> pair_leaders(const Window& window) {
  const auto& group = window.group();
  std::vector<Element> out;
  for (const auto& g : window)
    if (!group.is_identity(g) && canonical_compare(g, group.invert(g)) < 0) out.push_back(g);
  return out;
}

}  // namespace

RSet canonical_rset(const Window& window) { return RSet(window.group(), pair_leaders(window)); }

RSet rset_from_cone(const Window& window, const LeftOrderCone& cone) {
  std::vector<Element> out;
  for (const auto& g : window)
    if (!window.group().is_identity(g) && cone.positive(g)) out.push_back(g);
  return RSet(window.group(), std::move(out));
}

RSet random_rset(const Window& window, std::mt19937_64& rng, bool full_coverage) {
  std::uniform_int_distribution<int> pick(0, full_coverage ? 1 : 2);
  std::vector<Element> out;
  for (const auto& g : pair_leaders(window)) {
    switch (pick(rng)) {
      case 0:
        out.push_back(g);
        break;
      case 1:
        out.push_back(window.group().invert(g));
        break;
      default:
        break;
    }
  }
  return RSet(window.group(), std::move(out));
}

// ---------------------------------------------------------------------------
// Peeling

namespace {

void check_problem(const ExtensionProblem& p) {
  if (!(p.r.group() == p.window.group()))
    throw ExtensionError(ExtensionError::Kind::invalid_rset, "R and window belong to different groups");
}

}  // namespace

OrderTable peel_solve(const ExtensionProblem& problem) {
  check_problem(problem);
  const auto& window = problem.window;
  const auto& group = window.group();
  if (problem.require_total && !problem.r.covers(window))
    throw ExtensionError(ExtensionError::Kind::incomplete_rset,
                         "a total order needs R to meet every inverse pair of the window");
  const std::size_t n = window.size();

  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[i] = *window.index_of(group.invert(window[i]));
  std::vector<std::size_t> reflect(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t s = 0; s < n; ++s)
      if (a != s)
        reflect[a * n + s] =
            window.index_of(group.compose(group.compose(window[a], group.invert(window[s])), window[a])).value_or(n);

  std::vector<unsigned char> alive(n, 1);
  std::vector<std::size_t> layer(n, 0);
  std::size_t step = 0;
  auto remaining = [&] {
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && !group.is_identity(window[i])) return true;
    return false;
  };
  while (remaining()) {
    std::optional<std::size_t> chosen;
    for (std::size_t a = 0; a < n && !chosen; ++a) {
      if (!alive[a] || group.is_identity(window[a])) continue;
      bool extreme = true;
      for (std::size_t s = 0; s < n && extreme; ++s) {
        const auto r = reflect[a * n + s];
        if (alive[s] && s != a && r < n && alive[r]) extreme = false;
      }
      if (extreme) chosen = a;
    }
    if (!chosen)
      throw ExtensionError(ExtensionError::Kind::no_extreme_point, "a peeling stage has no extreme point");
    const auto a = *chosen;
    const auto b = inverse[a];
    if (a == b)
      throw ExtensionError(ExtensionError::Kind::torsion, "torsion: " + group.encode(window[a]) + " is its own inverse");
    alive[a] = alive[b] = 0;
    layer[a] = layer[b] = step++;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) layer[i] = step;

  OrderTable table(window);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (layer[i] > layer[j] || (layer[i] == layer[j] && j == inverse[i] && problem.r.contains(window[i])))
        table.set_less(i, j);
    }
  return table;
}

// ---------------------------------------------------------------------------
// Backtracking

namespace {

enum Rel : unsigned char { kUnknown, kLess, kGreater, kIncomparable };

class Backtracker {
 public:
  Backtracker(const ExtensionProblem& problem, std::uint64_t budget)
      : problem_(problem), window_(problem.window), n_(window_.size()), budget_(budget), state_(n_ * n_, kUnknown) {
    const auto& group = window_.group();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
    pair_clauses_.resize(n_ * n_);
    for (std::size_t g = 0; g < n_; ++g)
      for (std::size_t u = 0; u < n_; ++u) {
        if (u == g) continue;
        const auto v = window_.index_of(
            group.compose(group.compose(window_[g], group.invert(window_[u])), window_[g]));
        if (!v) continue;
        const std::size_t c = clauses_.size();
        clauses_.push_back({g, u, *v});
        pair_clauses_[key(g, u)].push_back(c);
        pair_clauses_[key(g, *v)].push_back(c);
      }
  }

  BacktrackResult run() {
    const auto& group = window_.group();
    ++nodes_;
    bool ok = true;
    for (std::size_t i = 0; i < n_ && ok; ++i) {
      const auto& g = window_[i];
      if (group.is_identity(g)) continue;
      const std::size_t j = *window_.index_of(group.invert(g));
      if (i > j) continue;
      if (problem_.r.contains(g))
        ok = require_less(i, j);
      else if (problem_.r.contains(window_[j]))
        ok = require_less(j, i);
      else
        ok = !problem_.require_total && assign(i, j, kIncomparable);
    }
    ok = ok && propagate();
    BacktrackResult result;
    if (ok && search()) {
      OrderTable table(window_);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (i != j && rel(i, j) == kLess) table.set_less(i, j);
      result.table = std::move(table);
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Clause {
    std::size_t g, u, v;  // g < u or g < v
  };

  std::size_t key(std::size_t a, std::size_t b) const { return std::min(a, b) * n_ + std::max(a, b); }

  Rel rel(std::size_t a, std::size_t b) const {
    const Rel r = static_cast<Rel>(state_[key(a, b)]);
    if (a < b || r == kUnknown || r == kIncomparable) return r;
    return r == kLess ? kGreater : kLess;
  }

  bool assign(std::size_t a, std::size_t b, Rel r) {
    const auto k = key(a, b);
    if (a > b && (r == kLess || r == kGreater)) r = r == kLess ? kGreater : kLess;
    if (state_[k] != kUnknown) return state_[k] == r;
    state_[k] = r;
    trail_.push_back(k);
    queue_.push_back(k);
    return true;
  }

  bool require_less(std::size_t a, std::size_t b) { return a != b && assign(a, b, kLess); }

  // Literal "a < b": 1 true, 0 false, -1 unknown.
  int literal(std::size_t a, std::size_t b) const {
    const Rel r = rel(a, b);
    if (r == kUnknown) return -1;
    return r == kLess ? 1 : 0;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const auto k = queue_.front();
      queue_.pop_front();
      const std::size_t i = k / n_;
      const std::size_t j = k % n_;
      const Rel r = static_cast<Rel>(state_[k]);
      if (r == kLess || r == kGreater) {
        const std::size_t lo = r == kLess ? i : j;
        const std::size_t hi = r == kLess ? j : i;
        for (std::size_t z = 0; z < n_; ++z) {
          if (z == lo || z == hi) continue;
          if (rel(hi, z) == kLess && !require_less(lo, z)) return fail();
          if (rel(z, lo) == kLess && !require_less(z, hi)) return fail();
        }
      }
      for (auto c : pair_clauses_[k]) {
        const auto& cl = clauses_[c];
        const int a = literal(cl.g, cl.u);
        const int b = literal(cl.g, cl.v);
        if (a == 1 || b == 1) continue;
        if (a == 0 && b == 0) return fail();
        if (a == 0 && !require_less(cl.g, cl.v)) return fail();
        if (b == 0 && !require_less(cl.g, cl.u)) return fail();
      }
    }
    return true;
  }

  bool fail() {
    queue_.clear();
    return false;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      state_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
  }

  bool search() {
    auto next = std::find_if(pairs_.begin(), pairs_.end(),
                             [&](const auto& p) { return state_[key(p.first, p.second)] == kUnknown; });
    if (next == pairs_.end()) return true;
    const auto [i, j] = *next;
    for (Rel choice : {kLess, kGreater, kIncomparable}) {
      if (choice == kIncomparable && problem_.require_total) break;
      if (++nodes_ > budget_)
        throw ExtensionError(ExtensionError::Kind::budget, "backtracking node budget exhausted");
      const auto mark = trail_.size();
      if (assign(i, j, choice) && propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  const ExtensionProblem& problem_;
  const Window& window_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<unsigned char> state_;  // indexed by key(a, b), relation of min to max
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::size_t>> pair_clauses_;
  std::vector<std::size_t> trail_;
  std::deque<std::size_t> queue_;
};

}  // namespace

BacktrackResult backtrack_solve(const ExtensionProblem& problem, std::size_t window_cap, std::uint64_t node_budget) {
  check_problem(problem);
  if (problem.window.size() > window_cap)
    throw ExtensionError(ExtensionError::Kind::window_too_large,
                         "window of " + std::to_string(problem.window.size()) + " elements exceeds the cap of " +
                             std::to_string(window_cap));
  return Backtracker(problem, node_budget).run();
}

// ---------------------------------------------------------------------------
// Validation and towers

ExtensionValidation validate_solution(const OrderTable& table, const ExtensionProblem& problem) {
  const auto& window = problem.window;
  const auto& group = window.group();
  if (!std::equal(window.begin(), window.end(), table.window().begin(), table.window().end()))
    throw std::invalid_argument("table and problem windows differ");
  ExtensionValidation report;
  report.order = validate_strict_partial_order(table);
  const std::size_t n = window.size();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t u = 0; u < n; ++u) {
      if (u == g) continue;
      const auto v = window.index_of(group.compose(group.compose(window[g], group.invert(window[u])), window[g]));
      if (v && !table.less(g, u) && !table.less(g, *v)) report.condition_i.emplace_back(window[g], window[u], window[*v]);
    }
  for (std::size_t g = 0; g < n; ++g) {
    if (group.is_identity(window[g])) continue;
    const auto inv = *window.index_of(group.invert(window[g]));
    if (table.less(g, inv) != problem.r.contains(window[g])) report.condition_ii.push_back(window[g]);
  }
  if (problem.require_total) {
    auto t = is_total(table);
    if (!t.total) report.totality = t.incomparable;
  }
  return report;
}

bool TowerReport::all_coherent() const {
  return std::all_of(coherent.begin(), coherent.end(), [](bool c) { return c; });
}

TowerReport tower_solve(const GroupSpec& group, const std::vector<int>& radii, const RSet& r, bool require_total) {
  if (radii.empty()) throw std::invalid_argument("tower needs at least one radius");
  if (!std::is_sorted(radii.begin(), radii.end()) ||
      std::adjacent_find(radii.begin(), radii.end()) != radii.end())
    throw std::invalid_argument("tower radii must be strictly increasing");
  TowerReport report;
  report.radii = radii;
  for (int radius : radii) {
    ExtensionProblem problem{generate_ball(group, radius), r, require_total};
    report.tables.push_back(peel_solve(problem));
  }
  for (std::size_t i = 0; i + 1 < report.tables.size(); ++i) {
    const auto& small = report.tables[i];
    report.coherent.push_back(report.tables[i + 1].restricted_to(small.window()) == small);
  }
  return report;
}

}  // namespace ordo
