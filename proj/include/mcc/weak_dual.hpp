#pragma once

#include <vector>

#include "mcc/graph.hpp"

namespace mcc {

/// One internal triangular face. Poles (u, v) are the endpoints of the
/// attachment edge towards the parent (an outer edge at the root); w is the
/// apex. The child on edge (u, w) is `left`, the child on (w, v) is `right`.
struct DualNode {
  Vertex u = -1, v = -1, w = -1;
  int parent = -1;
  int left = -1;
  int right = -1;

  int num_children() const { return (left >= 0) + (right >= 0); }
};

/// Weak dual of a maximal outerplanar graph, rooted at a leaf face.
struct WeakDualTree {
  std::vector<DualNode> nodes;
  int root = 0;
  /// Nodes in breadth-first order from the root; reverse it for bottom-up.
  std::vector<int> order;

  std::size_t num_tree_edges() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// Recognizes a maximal outerplanar graph (n >= 3) by ear decomposition and
/// returns its weak dual. Throws RecognitionError naming the first failed
/// condition: edge count, biconnectivity, ear decomposition, or an edge
/// shared by more than two triangles.
WeakDualTree build_weak_dual(const Graph& g);

/// Vertices of G(mu), the subgraph whose weak dual is the subtree at `node`,
/// in ascending order.
std::vector<Vertex> subtree_vertices(const WeakDualTree& tree, int node);

}  // namespace mcc
