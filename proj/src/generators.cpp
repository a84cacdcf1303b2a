#include "mcc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

std::size_t pow3(int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

}  // namespace

Graph gen_wheel(int n) {
  if (n < 4) throw InvalidParameter("wheel needs n >= 4, got " + std::to_string(n));
  Graph g(n);
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % rim);
  }
  g.set_family({"wheel", {{"n", n}}});
  return g;
}

Graph gen_double_wheel(int n, bool centers_adjacent) {
  if (n < 5) throw InvalidParameter("double wheel needs n >= 5, got " + std::to_string(n));
  Graph g(n);
  const int rim = n - 2;
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 2 + i);
    g.add_edge(1, 2 + i);
    g.add_edge(2 + i, 2 + (i + 1) % rim);
  }
  if (centers_adjacent) g.add_edge(0, 1);
  g.set_family({"double-wheel", {{"n", n}, {"centers_adjacent", centers_adjacent}}});
  return g;
}

std::pair<Graph, SnowflakeMeta> gen_snowflake(int h) {
  if (h < 0) throw InvalidParameter("snowflake height must be >= 0");
  if (h > 24) throw InvalidParameter("snowflake height " + std::to_string(h) + " exceeds resource limit 24");
  const int n = 3 << h;
  Graph g(n);
  SnowflakeMeta meta;
  meta.height = h;
  meta.vertex_height.assign(n, 0);
  meta.parent.assign(n, -1);
  meta.second_ancestor.assign(n, -1);

  std::vector<Vertex> cycle{0, 1, 2};
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  Vertex next = 3;
  for (int level = 1; level <= h; ++level) {
    std::vector<Vertex> grown;
    grown.reserve(cycle.size() * 2);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
      Vertex x = next++;
      g.add_edge(a, x);
      g.add_edge(b, x);
      meta.vertex_height[x] = level;
      // Exactly one endpoint of an outer edge sits one height below, except
      // in the first ring where both are at height 0.
      bool a_is_parent = meta.vertex_height[a] == level - 1;
      meta.parent[x] = a_is_parent ? a : b;
      meta.second_ancestor[x] = a_is_parent ? b : a;
      grown.push_back(a);
      grown.push_back(x);
    }
    cycle = std::move(grown);
  }
  g.set_outer_cycle(cycle);
  g.set_levels(meta.vertex_height);
  g.set_family({"snowflake", {{"h", h}}});
  return {std::move(g), std::move(meta)};
}

std::vector<int> OuterpathMeta::fan_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(fans.size());
  for (const auto& f : fans) sizes.push_back(f.size());
  return sizes;
}

std::pair<Graph, OuterpathMeta> gen_outerpath(std::span<const int> fan_sizes) {
  const int k = static_cast<int>(fan_sizes.size());
  if (k == 0) throw InvalidParameter("outerpath needs at least one fan");
  for (int i = 0; i < k; ++i) {
    const bool end = (i == 0 || i == k - 1);
    const int min_size = k == 1 ? 5 : (end ? 4 : 3);
    if (fan_sizes[i] < min_size)
      throw InvalidParameter("fan " + std::to_string(i + 1) + " has size " +
                             std::to_string(fan_sizes[i]) + ", needs >= " + std::to_string(min_size));
  }

  OuterpathMeta meta;
  for (int i = 0; i < k; ++i) meta.spine.push_back(i);
  Vertex next = k;
  std::vector<std::vector<Vertex>> interior(k);
  for (int i = 0; i < k; ++i) {
    if (i == 0) meta.first_end = next++;
    for (int j = 0; j < fan_sizes[i] - 3; ++j) interior[i].push_back(next++);
    if (i == k - 1) meta.last_end = next++;
  }
  const int n = next;

  // spine_at(j) is v_j for j in 0..k+1.
  auto spine_at = [&](int j) -> Vertex {
    if (j == 0) return meta.first_end;
    if (j == k + 1) return meta.last_end;
    return meta.spine[j - 1];
  };

  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (int i = 1; i <= k; ++i) {
    Fan fan;
    fan.apex = spine_at(i);
    fan.rim.push_back(spine_at(i - 1));
    fan.rim.insert(fan.rim.end(), interior[i - 1].begin(), interior[i - 1].end());
    fan.rim.push_back(spine_at(i + 1));
    for (std::size_t r = 0; r < fan.rim.size(); ++r) {
      add(fan.apex, fan.rim[r]);
      if (r + 1 < fan.rim.size()) add(fan.rim[r], fan.rim[r + 1]);
    }
    meta.fans.push_back(std::move(fan));
  }

  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);

  // Odd fans lie on one side of the spine, even fans on the other.
  std::vector<Vertex> side_odd{spine_at(0)}, side_even{spine_at(1)};
  for (int i = 1; i <= k; ++i) {
    auto& side = (i % 2 == 1) ? side_odd : side_even;
    side.insert(side.end(), interior[i - 1].begin(), interior[i - 1].end());
    side.push_back(spine_at(i + 1));
  }
  std::vector<Vertex> cycle = side_odd;
  cycle.insert(cycle.end(), side_even.rbegin(), side_even.rend());
  g.set_outer_cycle(std::move(cycle));
  g.set_family({"outerpath", {{"fan_sizes", std::vector<int>(fan_sizes.begin(), fan_sizes.end())}}});
  return {std::move(g), std::move(meta)};
}

std::vector<int> random_outerpath_fan_sizes(int max_degree, std::uint64_t seed) {
  if (max_degree < 4) throw InvalidParameter("outerpath maximum degree must be >= 4");
  std::mt19937_64 rng(seed);
  const int k = std::uniform_int_distribution<int>(2, 6)(rng);
  // Apex degree is |f| for end fans and |f| + 1 for middle fans.
  std::vector<int> sizes(k);
  for (int i = 0; i < k; ++i) {
    const bool end = (i == 0 || i == k - 1);
    const int lo = end ? 4 : 3;
    const int hi = std::max(lo, end ? max_degree : max_degree - 1);
    sizes[i] = std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  const int top = std::uniform_int_distribution<int>(0, k - 1)(rng);
  const bool top_end = (top == 0 || top == k - 1);
  sizes[top] = top_end ? max_degree : max_degree - 1;
  return sizes;
}

Planar3TreeMeta::Planar3TreeMeta(int k) : k_(k) {
  if (k < 0) throw InvalidParameter("complete planar 3-tree needs k >= 0");
  if (k > 15) throw InvalidParameter("k = " + std::to_string(k) + " exceeds resource limit 15");
  depth_offset_.resize(k + 2);
  for (int d = 0; d <= k + 1; ++d) depth_offset_[d] = (pow3(d) - 1) / 2;
  corners_.resize(depth_offset_[k + 1]);
  corners_[0] = {0, 1, 2};
  const std::size_t internal = depth_offset_[k];
  for (std::size_t f = 0; f < internal; ++f) {
    const Vertex c = center(f);
    for (int j = 0; j < 3; ++j) {
      auto child_corners = corners_[f];
      child_corners[j] = c;
      corners_[child(f, j)] = child_corners;
    }
  }
}

int Planar3TreeMeta::num_vertices() const { return static_cast<int>((pow3(k_) + 5) / 2); }

int Planar3TreeMeta::depth(std::size_t face) const {
  auto it = std::upper_bound(depth_offset_.begin(), depth_offset_.end(), face);
  return static_cast<int>(it - depth_offset_.begin()) - 1;
}

int Planar3TreeMeta::vertex_level(Vertex v) const {
  if (v < 3) return 0;
  return depth(face_of_center(v)) + 1;
}

std::vector<Vertex> Planar3TreeMeta::central_path(std::size_t face, int omitted) const {
  std::vector<Vertex> path;
  for (std::size_t f = face; !is_empty(f); f = child(f, omitted)) path.push_back(center(f));
  return path;
}

std::pair<Graph, Planar3TreeMeta> gen_complete_3tree(int k) {
  Planar3TreeMeta meta(k);
  const int n = meta.num_vertices();
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const auto& c = meta.corners(Planar3TreeMeta::face_of_center(v));
    for (Vertex x : c) edges.emplace_back(std::min(x, v), std::max(x, v));
  }
  std::sort(edges.begin(), edges.end());
  Graph g = Graph::from_edges(n, edges);
  std::vector<int> levels(n);
  for (Vertex v = 0; v < n; ++v) levels[v] = meta.vertex_level(v);
  g.set_levels(std::move(levels));
  g.set_outer_cycle({0, 1, 2});
  g.set_family({"complete-3tree", {{"k", k}}});
  return {std::move(g), std::move(meta)};
}

namespace {

double log_catalan(int m) {
  return std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 2.0) - std::lgamma(m + 1.0);
}

}  // namespace

Graph gen_random_mop(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidParameter("random maximal outerplanar graph needs n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);

  // Polygon i..j with base edge (i, j): the apex m splits it into two
  // polygons; choosing m proportional to the product of their triangulation
  // counts makes the whole triangulation uniform.
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  std::vector<double> weight;
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    weight.assign(j - i - 1, 0.0);
    double top = -INFINITY;
    for (int m = i + 1; m < j; ++m) {
      weight[m - i - 1] = log_catalan(m - i - 1) + log_catalan(j - m - 1);
      top = std::max(top, weight[m - i - 1]);
    }
    double total = 0.0;
    for (double& w : weight) total += (w = std::exp(w - top));
    double pick = unit(rng) * total;
    int apex = j - 1;
    for (int m = i + 1; m < j; ++m) {
      pick -= weight[m - i - 1];
      if (pick < 0.0) {
        apex = m;
        break;
      }
    }
    if (apex - i >= 2) edges.emplace_back(i, apex);
    if (j - apex >= 2) edges.emplace_back(apex, j);
    stack.emplace_back(i, apex);
    stack.emplace_back(apex, j);
  }
  std::sort(edges.begin(), edges.end());
  Graph g = Graph::from_edges(n, edges);
  std::vector<Vertex> cycle(n);
  for (int v = 0; v < n; ++v) cycle[v] = v;
  g.set_outer_cycle(std::move(cycle));
  g.set_family({"random-mop", {{"n", n}, {"seed", seed}}});
  return g;
}

}  // namespace mcc
