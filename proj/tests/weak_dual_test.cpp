#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "mcc/errors.hpp"
#include "mcc/generators.hpp"
#include "mcc/weak_dual.hpp"
#include "support/brute_force.hpp"

namespace mcc {
namespace {

std::string recognition_message(const Graph& g) {
  try {
    build_weak_dual(g);
  } catch (const RecognitionError& e) {
    return e.what();
  }
  return "";
}

void check_tree(const Graph& g, const WeakDualTree& t) {
  const int n = g.num_vertices();
  ASSERT_EQ(static_cast<int>(t.nodes.size()), n - 2);
  EXPECT_EQ(t.num_tree_edges(), static_cast<std::size_t>(n - 3));
  EXPECT_EQ(t.order.size(), t.nodes.size());
  EXPECT_EQ(t.order.front(), t.root);
  std::set<std::set<Vertex>> faces;
  std::vector<int> position(t.nodes.size());
  for (std::size_t i = 0; i < t.order.size(); ++i) position[t.order[i]] = static_cast<int>(i);
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& d = t.nodes[id];
    EXPECT_TRUE(g.has_edge(d.u, d.v) && g.has_edge(d.u, d.w) && g.has_edge(d.v, d.w));
    faces.insert({d.u, d.v, d.w});
    if (d.left >= 0) {
      const auto& c = t.nodes[d.left];
      EXPECT_EQ(c.parent, static_cast<int>(id));
      EXPECT_EQ(std::set<Vertex>({c.u, c.v}), std::set<Vertex>({d.u, d.w}));
      EXPECT_GT(position[d.left], position[id]);
    }
    if (d.right >= 0) {
      const auto& c = t.nodes[d.right];
      EXPECT_EQ(c.parent, static_cast<int>(id));
      EXPECT_EQ(std::set<Vertex>({c.u, c.v}), std::set<Vertex>({d.w, d.v}));
    }
  }
  EXPECT_EQ(faces.size(), t.nodes.size());
  const auto& root = t.nodes[t.root];
  EXPECT_EQ(root.parent, -1);
  EXPECT_LE(root.num_children(), 1);
  // The root's attachment edge lies in exactly one triangle, so it is an outer edge.
  int triangles = 0;
  for (Vertex x = 0; x < n; ++x)
    if (x != root.u && x != root.v && g.has_edge(x, root.u) && g.has_edge(x, root.v)) ++triangles;
  EXPECT_EQ(triangles, 1);
}

TEST(WeakDual, Triangle) {
  WeakDualTree t = build_weak_dual(gen_random_mop(3, 1));
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_EQ(t.num_tree_edges(), 0u);
}

TEST(WeakDual, Diamond) {
  Graph g = gen_random_mop(4, 0);
  WeakDualTree t = build_weak_dual(g);
  EXPECT_EQ(t.nodes.size(), 2u);
  EXPECT_EQ(t.num_tree_edges(), 1u);
  check_tree(g, t);
}

TEST(WeakDual, FiveVertexFanIsAPath) {
  Graph g(5);
  for (Vertex v = 1; v < 5; ++v) g.add_edge(0, v);
  for (Vertex v = 1; v < 4; ++v) g.add_edge(v, v + 1);
  WeakDualTree t = build_weak_dual(g);
  ASSERT_EQ(t.nodes.size(), 3u);
  for (const auto& d : t.nodes) EXPECT_LE(d.num_children(), 1);
  check_tree(g, t);
}

TEST(WeakDual, RejectsFourCycleByEdgeCount) {
  Graph g(4);
  for (Vertex v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
  EXPECT_NE(recognition_message(g).find("edge"), std::string::npos);
}

TEST(WeakDual, RejectsCutVertex) {
  // K4 plus a pendant vertex: m = 2n - 3 but vertex 3 is a cut vertex.
  Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  EXPECT_NE(recognition_message(g).find("biconnected"), std::string::npos);
}

TEST(WeakDual, RejectsKTwoThreePlusEdge) {
  Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
  EXPECT_NE(recognition_message(g).find("ear decomposition"), std::string::npos);
}

TEST(WeakDual, RejectsPrism) {
  Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(recognition_message(g).find("ear decomposition"), std::string::npos);
}

TEST(WeakDual, RejectsEdgeInThreeTriangles) {
  // K_{1,1,3}: every degree-2 vertex is removable, yet edge (0,1) lies in three triangles.
  Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_NE(recognition_message(g).find("more than two triangles"), std::string::npos);
}

TEST(WeakDual, RejectsTinyGraphs) { EXPECT_THROW(build_weak_dual(Graph(2)), RecognitionError); }

TEST(WeakDual, RandomMopsAndRelabelings) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 30);
    Graph g = gen_random_mop(n, seed);
    check_tree(g, build_weak_dual(g));
    Graph h = testing::relabel(g, testing::random_permutation(n, seed + 9));
    check_tree(h, build_weak_dual(h));
  }
}

TEST(WeakDual, GeneratedFamilies) {
  for (int h = 0; h <= 6; ++h) {
    Graph g = gen_snowflake(h).first;
    check_tree(g, build_weak_dual(g));
  }
  Graph o = gen_outerpath(std::vector<int>{6, 3, 5, 4}).first;
  check_tree(o, build_weak_dual(o));
}

TEST(WeakDual, SubtreeVertices) {
  Graph g = gen_random_mop(12, 3);
  WeakDualTree t = build_weak_dual(g);
  auto all = subtree_vertices(t, t.root);
  EXPECT_EQ(all.size(), 12u);
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    auto vs = subtree_vertices(t, static_cast<int>(id));
    EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
    std::size_t faces = 0;
    std::vector<int> stack{static_cast<int>(id)};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++faces;
      if (t.nodes[x].left >= 0) stack.push_back(t.nodes[x].left);
      if (t.nodes[x].right >= 0) stack.push_back(t.nodes[x].right);
    }
    EXPECT_EQ(vs.size(), faces + 2);
  }
}

}  // namespace
}  // namespace mcc
