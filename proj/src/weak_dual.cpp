#include "mcc/weak_dual.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

bool is_biconnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) return false;
  std::vector<int> disc(n, -1), low(n, 0);
  // Iterative DFS computing low points; a non-root vertex with a child whose
  // low point is not above it is an articulation point.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  disc[0] = low[0] = 0;
  int time = 1;
  int root_children = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (w == f.parent) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = time++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    Frame& up = stack.back();
    low[up.v] = std::min(low[up.v], low[done.v]);
    if (up.v != 0 && low[done.v] >= disc[up.v]) return false;
  }
  if (root_children > 1) return false;
  return std::all_of(disc.begin(), disc.end(), [](int d) { return d >= 0; });
}

std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

WeakDualTree build_weak_dual(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) throw RecognitionError("maximal outerplanar graph needs n >= 3");
  if (g.num_edges() != static_cast<std::size_t>(2 * n - 3))
    throw RecognitionError("edge count " + std::to_string(g.num_edges()) + " differs from 2n-3 = " +
                           std::to_string(2 * n - 3));
  if (!is_biconnected(g)) throw RecognitionError("graph is not biconnected");

  // Ear decomposition: repeatedly strip a degree-2 vertex whose neighbors
  // are adjacent; each strip yields one triangle.
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 2) queue.push_back(v);
  std::vector<std::array<Vertex, 3>> triangles;
  triangles.reserve(n - 2);
  int remaining = n;
  std::size_t head = 0;
  while (remaining > 3) {
    if (head == queue.size())
      throw RecognitionError("ear decomposition failed: no removable degree-2 vertex with " +
                             std::to_string(remaining) + " vertices left");
    Vertex x = queue[head++];
    if (removed[x] || degree[x] != 2) continue;
    std::array<Vertex, 2> nb{-1, -1};
    int found = 0;
    for (Vertex y : g.neighbors(x))
      if (!removed[y]) nb[found++] = y;
    if (!g.has_edge(nb[0], nb[1]))
      throw RecognitionError("ear decomposition failed: neighbors of degree-2 vertex " +
                             std::to_string(x) + " are not adjacent");
    triangles.push_back({x, nb[0], nb[1]});
    removed[x] = 1;
    --remaining;
    for (Vertex y : nb)
      if (--degree[y] == 2) queue.push_back(y);
  }
  {
    std::array<Vertex, 3> last{};
    int found = 0;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) last[found++] = v;
    if (!g.has_edge(last[0], last[1]) || !g.has_edge(last[1], last[2]) || !g.has_edge(last[0], last[2]))
      throw RecognitionError("ear decomposition failed: last three vertices do not form a triangle");
    triangles.push_back(last);
  }

  std::unordered_map<std::uint64_t, std::vector<int>> faces_of_edge;
  faces_of_edge.reserve(3 * triangles.size());
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const auto& tr = triangles[t];
    for (int a = 0; a < 3; ++a) {
      auto& slot = faces_of_edge[edge_key(tr[a], tr[(a + 1) % 3])];
      slot.push_back(t);
      if (slot.size() > 2)
        throw RecognitionError("edge (" + std::to_string(tr[a]) + "," + std::to_string(tr[(a + 1) % 3]) +
                               ") lies on more than two triangles");
    }
  }

  auto shared_count = [&](Vertex a, Vertex b) { return faces_of_edge.at(edge_key(a, b)).size(); };

  // Root: the lowest-indexed leaf face (at most one shared edge); its
  // attachment edge is its lexicographically smallest outer edge.
  int root = -1;
  for (int t = 0; t < static_cast<int>(triangles.size()) && root < 0; ++t) {
    const auto& tr = triangles[t];
    int shared = 0;
    for (int a = 0; a < 3; ++a) shared += shared_count(tr[a], tr[(a + 1) % 3]) == 2;
    if (shared <= 1) root = t;
  }
  WeakDualTree tree;
  tree.nodes.resize(triangles.size());
  std::vector<int> node_of_face(triangles.size(), -1);
  {
    auto tr = triangles[root];
    std::sort(tr.begin(), tr.end());
    std::array<Edge, 3> cand{Edge{tr[0], tr[1]}, Edge{tr[0], tr[2]}, Edge{tr[1], tr[2]}};
    std::array<Vertex, 3> apex{tr[2], tr[1], tr[0]};
    for (int e = 0; e < 3; ++e) {
      if (shared_count(cand[e].first, cand[e].second) == 1) {
        tree.nodes[0] = {cand[e].first, cand[e].second, apex[e], -1, -1, -1};
        break;
      }
    }
  }
  node_of_face[root] = 0;
  tree.root = 0;
  tree.order.push_back(0);
  int next_node = 1;

  std::vector<int> face_of_node(triangles.size(), -1);
  face_of_node[0] = root;
  for (std::size_t head_idx = 0; head_idx < tree.order.size(); ++head_idx) {
    int id = tree.order[head_idx];
    DualNode node = tree.nodes[id];
    int face = face_of_node[id];
    auto attach = [&](Vertex a, Vertex b) -> int {
      for (int other : faces_of_edge.at(edge_key(a, b))) {
        if (other == face) continue;
        const auto& tr = triangles[other];
        Vertex apex = tr[0] + tr[1] + tr[2] - a - b;
        int child = next_node++;
        tree.nodes[child] = {a, b, apex, id, -1, -1};
        node_of_face[other] = child;
        face_of_node[child] = other;
        tree.order.push_back(child);
        return child;
      }
      return -1;
    };
    tree.nodes[id].left = attach(node.u, node.w);
    tree.nodes[id].right = attach(node.w, node.v);
  }
  if (tree.order.size() != triangles.size())
    throw RecognitionError("weak dual is not connected");
  return tree;
}

std::vector<Vertex> subtree_vertices(const WeakDualTree& tree, int node) {
  std::vector<Vertex> out;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    const DualNode& d = tree.nodes[stack.back()];
    stack.pop_back();
    out.insert(out.end(), {d.u, d.v, d.w});
    if (d.left >= 0) stack.push_back(d.left);
    if (d.right >= 0) stack.push_back(d.right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mcc
