#include <gtest/gtest.h>

#include <random>

#include "ordo/extend.hpp"

using namespace ordo;

namespace {

const GroupSpec Z = GroupSpec::integer_lattice(1);
Element z(std::int64_t n) { return Z.lattice({n}); }

ExtensionProblem z_problem(int radius, std::vector<int> r, bool total) {
  std::vector<Element> els;
  for (int v : r) els.push_back(z(v));
  return {generate_ball(Z, radius), RSet(Z, els), total};
}

OrderTable z_table(int radius, std::vector<std::pair<int, int>> pairs) {
  std::vector<std::pair<Element, Element>> els;
  for (auto [a, b] : pairs) els.emplace_back(z(a), z(b));
  return OrderTable(generate_ball(Z, radius), els);
}

// Exhaustive model check: every strict partial order on a tiny window that
// satisfies (i) and (ii); true iff one exists.
bool brute_satisfiable(const ExtensionProblem& p) {
  const auto& w = p.window;
  const std::size_t n = w.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> choice(pairs.size(), 0);
  while (true) {
    OrderTable t(w);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (choice[k] == 1) t.set_less(pairs[k].first, pairs[k].second);
      if (choice[k] == 2) t.set_less(pairs[k].second, pairs[k].first);
    }
    if (validate_solution(t, p).ok()) return true;
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) return false;
    ++choice[k];
  }
}

}  // namespace

TEST(RSet, Invariants) {
  EXPECT_THROW(RSet(Z, {z(0)}), ExtensionError);
  EXPECT_THROW(RSet(Z, {z(1), z(-1)}), ExtensionError);
  const RSet r(Z, {z(1), z(-2)});
  EXPECT_TRUE(r.contains(z(-2)));
  EXPECT_FALSE(r.covers(generate_ball(Z, 3)));
  EXPECT_TRUE(r.covers(generate_ball(Z, 2)));
  EXPECT_EQ(canonical_rset(generate_ball(Z, 3)).elements(), (std::vector<Element>{z(1), z(2), z(3)}));
}

TEST(Peel, Examples) {
  const auto chain = peel_solve(z_problem(1, {1}, true));
  EXPECT_EQ(chain, z_table(1, {{0, 1}, {1, -1}, {0, -1}}));

  const auto layered = peel_solve(z_problem(2, {1, 2}, true));
  EXPECT_EQ(layered, z_table(2, {{0, 1}, {0, -1}, {0, 2}, {0, -2}, {1, 2}, {1, -2}, {-1, 2}, {-1, -2}, {1, -1}, {2, -2}}));

  const auto partial = peel_solve(z_problem(1, {}, false));
  EXPECT_EQ(partial, z_table(1, {{0, 1}, {0, -1}}));
  EXPECT_THROW(peel_solve(z_problem(1, {}, true)), ExtensionError);
}

TEST(Backtrack, Examples) {
  const auto sat = backtrack_solve(z_problem(1, {1}, true));
  ASSERT_TRUE(sat.sat());
  EXPECT_TRUE(validate_solution(*sat.table, z_problem(1, {1}, true)).ok());
  const auto unsat = backtrack_solve(z_problem(1, {}, true));
  EXPECT_FALSE(unsat.sat());
  EXPECT_GE(unsat.nodes, 1u);
  EXPECT_TRUE(backtrack_solve(z_problem(1, {}, false)).sat());
  EXPECT_THROW(backtrack_solve(z_problem(7, {}, false)), ExtensionError);
}

TEST(Validate, Examples) {
  const auto p = z_problem(1, {1}, true);
  EXPECT_TRUE(validate_solution(peel_solve(p), p).ok());
  const auto broken = validate_solution(z_table(1, {{0, 1}, {1, -1}}), p);
  ASSERT_EQ(broken.order.transitivity.size(), 1u);
  EXPECT_EQ(broken.order.transitivity[0], std::make_tuple(z(0), z(1), z(-1)));
  const auto wrong_r = validate_solution(z_table(1, {{0, 1}, {0, -1}, {1, -1}}), z_problem(1, {}, false));
  EXPECT_EQ(wrong_r.condition_ii, (std::vector<Element>{z(1)}));
}

TEST(Peel, SoundOnRandomProblems) {
  std::mt19937_64 rng(31);
  for (const char* text : {"zn:1", "zn:2", "q-sub:2", "free:2", "klein"}) {
    const auto G = GroupSpec::parse(text);
    for (int radius = 1; radius <= 2; ++radius) {
      const auto w = generate_ball(G, radius);
      for (int t = 0; t < 20; ++t) {
        const RSet r = random_rset(w, rng, t % 2 == 0);
        const ExtensionProblem p{w, r, false};
        const auto table = peel_solve(p);
        EXPECT_TRUE(validate_solution(table, p).ok()) << text;
        EXPECT_EQ(is_total(table).total, r.covers(w)) << text;
      }
    }
  }
}

TEST(Backtrack, AgreesWithExhaustiveModelCheck) {
  std::mt19937_64 rng(37);
  for (const char* text : {"zn:1", "free:2"}) {
    const auto G = GroupSpec::parse(text);
    const auto w = generate_ball(G, 1);
    for (int t = 0; t < 15; ++t) {
      for (bool total : {false, true}) {
        const ExtensionProblem p{w, random_rset(w, rng), total};
        const bool expected = brute_satisfiable(p);
        const auto result = backtrack_solve(p);
        EXPECT_EQ(result.sat(), expected) << text;
        if (result.sat()) EXPECT_TRUE(validate_solution(*result.table, p).ok());
      }
    }
  }
}

TEST(Peel, DistinctRSetsGiveDistinctOrders) {
  const auto w = generate_ball(Z, 2);
  std::vector<OrderTable> seen;
  // All 3^2 prescriptions on the two inverse pairs.
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2) {
      std::vector<Element> r;
      if (c1 < 2) r.push_back(z(c1 == 0 ? 1 : -1));
      if (c2 < 2) r.push_back(z(c2 == 0 ? 2 : -2));
      const auto t = peel_solve({w, RSet(Z, r), false});
      for (const auto& other : seen) EXPECT_FALSE(t == other);
      seen.push_back(t);
    }
  EXPECT_EQ(seen.size(), 9u);
}

TEST(Tower, Examples) {
  const auto z_report = tower_solve(Z, {1, 2, 3}, RSet(Z, {z(1), z(2), z(3)}), true);
  EXPECT_TRUE(z_report.all_coherent());
  const auto K = GroupSpec::klein();
  const auto k_report = tower_solve(K, {1, 2}, rset_from_cone(generate_ball(K, 2), standard_cone(K)), true);
  EXPECT_TRUE(k_report.all_coherent());
  const auto F = GroupSpec::free(2);
  const auto f_report = tower_solve(F, {1, 2}, canonical_rset(generate_ball(F, 2)), true);
  EXPECT_TRUE(f_report.all_coherent());
  for (const auto& t : f_report.tables) EXPECT_TRUE(is_total(t).total);
  EXPECT_THROW(tower_solve(Z, {2, 1}, RSet(Z, {}), false), std::invalid_argument);
}

TEST(Peel, RejectsMismatchedGroups) {
  EXPECT_THROW(peel_solve({generate_ball(Z, 1), RSet(GroupSpec::free(1), {}), false}), ExtensionError);
}
