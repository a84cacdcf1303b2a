#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mcc {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

/// Provenance of a generated graph: family name plus the parameters that
/// regenerate it.
struct FamilyTag {
  std::string name;
  nlohmann::json params = nlohmann::json::object();

  bool operator==(const FamilyTag&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 with optional embedding
/// metadata. Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws InvalidInput on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(int n, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::optional<std::vector<Vertex>>& outer_cycle() const { return outer_cycle_; }
  /// The cycle must consist of distinct vertices with consecutive pairs adjacent.
  void set_outer_cycle(std::vector<Vertex> cycle);

  const std::optional<std::vector<int>>& levels() const { return levels_; }
  void set_levels(std::vector<int> levels);

  const std::optional<FamilyTag>& family() const { return family_; }
  void set_family(FamilyTag tag) { family_ = std::move(tag); }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
  std::optional<std::vector<Vertex>> outer_cycle_;
  std::optional<std::vector<int>> levels_;
  std::optional<FamilyTag> family_;
};

/// Total assignment of one of `t` colors to each vertex.
struct Coloring {
  int t = 0;
  std::vector<Color> colors;

  bool operator==(const Coloring&) const = default;
};

struct Component {
  Color color = 0;
  std::vector<Vertex> vertices;  // ascending
};

/// Sizes of monochromatic components. `components` is ordered by smallest
/// contained vertex and partitions the vertex set.
struct MccReport {
  std::size_t max_component = 0;
  std::vector<std::size_t> per_color_max;
  std::vector<Component> components;
};

/// Maximal monochromatic connected vertex sets of `g` under `c`.
/// Throws InvalidInput when `c` is not a valid coloring of `g`.
MccReport monochromatic_components(const Graph& g, const Coloring& c,
                                   bool list_components = true);

int max_degree(const Graph& g);

/// True iff `c` colors every vertex of `g` with a color in 0..t-1.
bool validate_coloring(const Graph& g, const Coloring& c, int t);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Size of the largest connected component (0 for the empty graph).
std::size_t largest_connected_component(const Graph& g);

}  // namespace mcc
