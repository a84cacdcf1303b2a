#include "mcc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

#include "mcc/errors.hpp"
#include "mcc/union_find.hpp"

namespace mcc {

Graph::Graph(int n) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices())
    throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto pos = std::lower_bound(au.begin(), au.end(), v);
  if (pos != au.end() && *pos == v)
    throw InvalidInput("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  au.insert(pos, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_outer_cycle(std::vector<Vertex> cycle) {
  std::unordered_set<Vertex> seen;
  for (Vertex v : cycle) {
    check_vertex(v);
    if (!seen.insert(v).second)
      throw InvalidInput("outer cycle repeats vertex " + std::to_string(v));
  }
  for (std::size_t i = 0; i < cycle.size() && cycle.size() > 1; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    if (!has_edge(a, b))
      throw InvalidInput("outer cycle pair (" + std::to_string(a) + "," + std::to_string(b) +
                         ") is not an edge");
  }
  outer_cycle_ = std::move(cycle);
}

void Graph::set_levels(std::vector<int> levels) {
  if (static_cast<int>(levels.size()) != num_vertices())
    throw InvalidInput("levels length differs from vertex count");
  levels_ = std::move(levels);
}

MccReport monochromatic_components(const Graph& g, const Coloring& c, bool list_components) {
  const int n = g.num_vertices();
  if (static_cast<int>(c.colors.size()) != n)
    throw InvalidInput("coloring has " + std::to_string(c.colors.size()) +
                       " entries but graph has " + std::to_string(n) + " vertices");
  if (!validate_coloring(g, c, c.t))
    throw InvalidInput("coloring uses a color outside 0.." + std::to_string(c.t - 1));

  UnionFind uf(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && c.colors[u] == c.colors[v]) uf.unite(u, v);

  MccReport report;
  report.per_color_max.assign(c.t, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    std::size_t s = uf.size_of(v);
    auto& slot = report.per_color_max[c.colors[v]];
    slot = std::max(slot, s);
    report.max_component = std::max(report.max_component, s);
  }

  if (list_components) {
    std::vector<int> slot_of_root(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      int r = uf.find(v);
      if (slot_of_root[r] < 0) {
        slot_of_root[r] = static_cast<int>(report.components.size());
        report.components.push_back({c.colors[v], {}});
      }
      report.components[slot_of_root[r]].vertices.push_back(v);
    }
  }
  return report;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool validate_coloring(const Graph& g, const Coloring& c, int t) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices()) return false;
  return std::all_of(c.colors.begin(), c.colors.end(),
                     [t](Color x) { return x >= 0 && x < t; });
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), index[w]);
  return sub;
}

std::size_t largest_connected_component(const Graph& g) {
  const int n = g.num_vertices();
  UnionFind uf(n);
  for (auto [u, v] : g.edges()) uf.unite(u, v);
  std::size_t best = 0;
  for (Vertex v = 0; v < n; ++v) best = std::max(best, uf.size_of(v));
  return best;
}

}  // namespace mcc
