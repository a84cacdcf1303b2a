#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "mcc/errors.hpp"
#include "mcc/generators.hpp"
#include "mcc/oracle.hpp"
#include "mcc/outerplanar_dp.hpp"
#include "support/brute_force.hpp"

namespace mcc {
namespace {

constexpr Color B = kBlack;
constexpr Color W = kWhite;

DpState st(Color cu, Color cv, int su, int sv, int fb, int fw) { return {cu, cv, su, sv, fb, fw}; }

/// State of G(node) recomputed by BFS restricted to the node's vertex set.
DpState naive_state(const Graph& g, const std::vector<Vertex>& verts, Vertex u, Vertex v,
                    const std::vector<Color>& colors) {
  std::vector<char> inside(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (Vertex x : verts) inside[x] = 1;
  DpState s{colors[u], colors[v], 0, 0, 0, 0};
  for (Vertex start : verts) {
    if (seen[start]) continue;
    std::vector<Vertex> comp{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbors(comp[i]))
        if (inside[y] && !seen[y] && colors[y] == colors[start]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    const int size = static_cast<int>(comp.size());
    const bool has_u = std::find(comp.begin(), comp.end(), u) != comp.end();
    const bool has_v = std::find(comp.begin(), comp.end(), v) != comp.end();
    if (has_u) s.size_u = size;
    if (has_v) s.size_v = size;
    if (!has_u && !has_v) {
      int& slot = colors[start] == B ? s.free_black : s.free_white;
      slot = std::max(slot, size);
    }
  }
  return s;
}

TEST(EdgeStates, FourStates) {
  const auto& e = edge_states();
  EXPECT_EQ(e[0], st(B, B, 2, 2, 0, 0));
  EXPECT_EQ(e[1], st(B, W, 1, 1, 0, 0));
  EXPECT_EQ(e[2], st(W, B, 1, 1, 0, 0));
  EXPECT_EQ(e[3], st(W, W, 2, 2, 0, 0));
}

TEST(LeafTable, ContainsHandComputedStates) {
  DpTable t = leaf_table({0, 1, 2}, 10);
  EXPECT_EQ(t.states.size(), 8u);
  auto has = [&](const DpState& s) { return std::find(t.states.begin(), t.states.end(), s) != t.states.end(); };
  EXPECT_TRUE(has(st(B, B, 3, 3, 0, 0)));
  EXPECT_TRUE(has(st(B, B, 2, 2, 0, 1)));
  EXPECT_TRUE(has(st(B, W, 1, 2, 0, 0)));
  EXPECT_TRUE(std::is_sorted(t.states.begin(), t.states.end()));
}

TEST(LeafTable, CapPrunesLargeStates) {
  DpTable t = leaf_table({0, 1, 2}, 2);
  for (const auto& s : t.states) EXPECT_LE(s.worst(), 2);
  EXPECT_EQ(t.states.size(), 6u);
}

TEST(Combine, AllBlackTriangles) {
  EXPECT_EQ(combine_two_children(st(B, B, 3, 3, 0, 0), st(B, B, 3, 3, 0, 0), 10), st(B, B, 5, 5, 0, 0));
}

TEST(Combine, PolesMergeThroughAttachmentEdge) {
  EXPECT_EQ(combine_two_children(st(W, B, 1, 2, 0, 0), st(B, W, 1, 2, 0, 0), 10), st(W, W, 3, 3, 2, 0));
}

TEST(Combine, InconsistentSharedVertexIsAbsent) {
  EXPECT_FALSE(combine_two_children(st(B, B, 3, 3, 0, 0), st(W, W, 3, 3, 0, 0), 10));
  EXPECT_FALSE(combine_two_children(st(W, B, 1, 2, 0, 0), st(W, B, 1, 1, 0, 0), 10));
}

TEST(Combine, CapRule) {
  EXPECT_FALSE(combine_two_children(st(B, B, 3, 3, 0, 0), st(B, B, 3, 3, 0, 0), 4));
  EXPECT_TRUE(combine_two_children(st(B, B, 3, 3, 0, 0), st(B, B, 3, 3, 0, 0), 5));
}

TEST(CombineOneChild, Examples) {
  EXPECT_EQ(combine_one_child(st(B, B, 3, 3, 0, 0), ChildSide::kLeft, B, 10), st(B, B, 4, 4, 0, 0));
  EXPECT_EQ(combine_one_child(st(B, B, 2, 2, 0, 1), ChildSide::kLeft, W, 10), st(B, W, 2, 1, 0, 1));
  EXPECT_EQ(combine_one_child(st(B, B, 3, 3, 0, 0), ChildSide::kRight, B, 10), st(B, B, 4, 4, 0, 0));
  const int cap = 5;
  EXPECT_FALSE(combine_one_child(st(B, W, cap, 1, 0, 0), ChildSide::kRight, B, cap));
  EXPECT_FALSE(combine_one_child(st(W, B, 1, cap, 0, 0), ChildSide::kLeft, B, cap));
}

TEST(CombineOneChild, MatchesExplicitFourVertexGraphs) {
  // Child triangle (u, w, x) with poles (u, w); new vertex v adjacent to u and w.
  Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const Vertex u = 0, w = 1, x = 2, v = 3;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Color> c{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1};
    DpState child = naive_state(g, {u, w, x}, u, w, c);
    DpState whole = naive_state(g, {u, w, x, v}, u, v, c);
    EXPECT_EQ(combine_one_child(child, ChildSide::kLeft, c[v], 10), whole) << "mask " << mask;
    (void)x;
  }
}

/// Every coloring of G(node) with all sizes within cap yields a stored state,
/// and every stored state is realized by its reconstruction.
void audit_tables(const Graph& g, const DpRun& run) {
  const int n = g.num_vertices();
  for (int id = 0; id < static_cast<int>(run.tree.nodes.size()); ++id) {
    const auto& d = run.tree.nodes[id];
    const auto& table = run.tables[id];
    const auto verts = subtree_vertices(run.tree, id);
    ASSERT_LE(verts.size(), 16u);
    std::set<DpState> reachable;
    std::vector<Color> colors(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << verts.size()); ++mask) {
      for (std::size_t i = 0; i < verts.size(); ++i) colors[verts[i]] = (mask >> i) & 1;
      DpState s = naive_state(g, verts, d.u, d.v, colors);
      if (s.worst() <= run.cap) reachable.insert(s);
    }
    std::set<DpState> stored(table.states.begin(), table.states.end());
    EXPECT_EQ(stored.size(), table.states.size()) << "duplicate states at node " << id;
    EXPECT_EQ(stored, reachable) << "node " << id;

    for (int i = 0; i < static_cast<int>(table.states.size()); ++i) {
      std::fill(colors.begin(), colors.end(), -1);
      auto assignment = reconstruct(run, id, i);
      ASSERT_EQ(assignment.size(), verts.size());
      for (auto [v, c] : assignment) colors[v] = c;
      EXPECT_EQ(naive_state(g, verts, d.u, d.v, colors), table.states[i]);
      EXPECT_EQ(state_of_coloring(g, run.tree, id, colors), table.states[i]);
    }
  }
}

TEST(RunDp, TablesAreCompleteAndRealizable) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 4 + static_cast<int>(seed % 8);
    Graph g = gen_random_mop(n, seed);
    SCOPED_TRACE("seed " + std::to_string(seed));
    audit_tables(g, run_dp(g, {0, false}));
    audit_tables(g, run_dp(g, {3, false}));
  }
}

TEST(RunDp, TableInvariants) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_random_mop(10 + static_cast<int>(seed), seed);
    DpRun run = run_dp(g);
    const std::size_t limit = 4 * static_cast<std::size_t>(std::pow(run.cap + 1, 4));
    for (const auto& t : run.tables) {
      EXPECT_LE(t.states.size(), limit);
      for (const auto& s : t.states) {
        if (s.color_u == s.color_v) EXPECT_EQ(s.size_u, s.size_v);
        EXPECT_GE(s.size_u, 1);
        EXPECT_LE(s.worst(), run.cap);
      }
    }
  }
}

TEST(RunDp, RejectsHugeCap) { EXPECT_THROW(run_dp(gen_random_mop(6, 1), {1 << 15, false}), InvalidParameter); }

TEST(RunDp, PrunedTablesAreParetoFronts) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_random_mop(16, seed);
    DpRun full = run_dp(g, {0, false}), pruned = run_dp(g);
    for (std::size_t id = 0; id < full.tables.size(); ++id) {
      const auto& kept = pruned.tables[id].states;
      const auto& all = full.tables[id].states;
      for (const auto& s : kept) EXPECT_NE(std::find(all.begin(), all.end(), s), all.end());
      for (const auto& s : kept)
        for (const auto& o : kept)
          if (&s != &o && s.color_u == o.color_u && s.color_v == o.color_v && s.size_u == o.size_u &&
              s.size_v == o.size_v)
            EXPECT_FALSE(o.free_black <= s.free_black && o.free_white <= s.free_white);
      for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        std::vector<Color> colors(g.num_vertices(), 0);
        for (auto [v, c] : reconstruct(pruned, static_cast<int>(id), i)) colors[v] = c;
        EXPECT_EQ(state_of_coloring(g, pruned.tree, static_cast<int>(id), colors), kept[i]);
      }
    }
  }
}

TEST(SolveMcc2, SmallExamples) {
  EXPECT_EQ(solve_mcc2(gen_random_mop(3, 0)).value, 2);
  EXPECT_EQ(solve_mcc2(gen_random_mop(4, 0)).value, 2);
}

TEST(SolveMcc2, RejectsNonOuterplanar) {
  EXPECT_THROW(solve_mcc2(gen_wheel(6)), RecognitionError);
  EXPECT_THROW(solve_mcc2(gen_complete_3tree(2).first), RecognitionError);
}

TEST(SolveMcc2, MatchesBruteForceAndBerkeBound) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 11);
    Graph g = gen_random_mop(n, seed);
    Mcc2Solution s = solve_mcc2(g);
    SCOPED_TRACE("n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    EXPECT_EQ(s.value, testing::brute_force_mcc(g, 2));
    EXPECT_EQ(testing::naive_max_component(g, s.coloring.colors), s.value);
    EXPECT_LE(s.value, 2 * (max_degree(g) - 1));
  }
}

TEST(SolveMcc2, MatchesOracleOnLargerGraphs) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 14 + static_cast<int>(seed % 8);
    Graph g = gen_random_mop(n, seed);
    EXPECT_EQ(solve_mcc2(g).value, exact_mcc(g, 2).value) << "seed " << seed;
  }
}

TEST(SolveMcc2, PruningDominatedStatesKeepsValue) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_random_mop(8 + static_cast<int>(seed % 16), seed);
    Mcc2Solution a = solve_mcc2(g, {0, false}), b = solve_mcc2(g);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(testing::naive_max_component(g, b.coloring.colors), b.value);
  }
}

TEST(SolveMcc2, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 25);
    Graph g = gen_random_mop(n, seed);
    Graph h = testing::relabel(g, testing::random_permutation(n, seed ^ 0x5eed));
    EXPECT_EQ(solve_mcc2(g).value, solve_mcc2(h).value);
  }
}

TEST(SolveMcc2, GeneratedFamilies) {
  for (int h = 1; h <= 5; ++h) {
    Graph g = gen_snowflake(h).first;
    Mcc2Solution s = solve_mcc2(g);
    EXPECT_EQ(testing::naive_max_component(g, s.coloring.colors), s.value);
    EXPECT_LE(s.value, 2 * (max_degree(g) - 1));
  }
  Graph o = gen_outerpath(std::vector<int>{7, 4, 6}).first;
  EXPECT_EQ(solve_mcc2(o).value, testing::brute_force_mcc(o, 2));
}

}  // namespace
}  // namespace mcc
