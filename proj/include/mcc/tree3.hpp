#pragma once

#include <cstdint>
#include <vector>

#include "mcc/generators.hpp"
#include "mcc/graph.hpp"
#include "mcc/schemes.hpp"

namespace mcc {

/// Split of T_k for the 2-coloring: the outer vertices plus levels
/// 1..top_levels form one block of size n1; each of the 3^top_levels
/// residual trees yields a component of size n2.
struct LevelPlan {
  int k = 0;
  int top_levels = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t bound = 0;
};

/// Exhaustive search over top_levels in 0..k minimizing max(n1, n2); ties
/// go to the smaller top_levels.
LevelPlan plan_levels(int k);

struct PathWitness {
  std::vector<Vertex> vertices;
  Color color = 0;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
};

/// Recursive 3-coloring keeping every processed triangle bicolored: the
/// center and the three central paths take the color missing from the
/// triangle's corners. If `step_of_vertex` is given, it receives a group id
/// per vertex: 0 for outer vertices colored c1, 1 for the outer vertex
/// colored c2, and one id per recursive step after that.
SchemeResult color_3tree_3colors(const Graph& g, const Planar3TreeMeta& meta,
                                 std::vector<int>* step_of_vertex = nullptr);

/// True iff every monochromatic component equals exactly one step group.
bool components_match_steps(const MccReport& report, const std::vector<int>& step_of_vertex);

/// Follows the nested central vertices from the outer triangle, extending
/// the path whose end shares the center's color, and returns the longest of
/// the three paths. Throws PreconditionError unless the outer vertices carry
/// three distinct colors among 0..2.
PathWitness extract_monochromatic_path(const Graph& g, const Planar3TreeMeta& meta, const Coloring& c);

/// Two-coloring from plan_levels(k): the top block in color 0, then inside
/// each monochromatic triangle the neighbors of its corners in the other
/// color, recursing with alternating colors.
SchemeResult color_3tree_2colors(const Graph& g, const Planar3TreeMeta& meta);

struct WheelWitness {
  Graph wheel;                   // center 0, rim 1..R in cyclic order
  std::vector<Vertex> original;  // original[i] is the id of wheel vertex i in g
};

/// Wheel formed by outer vertex `outer_index` (1..3) and its 2^k + 1
/// neighbors. Throws PreconditionError for k = 0.
WheelWitness extract_outer_wheel(const Graph& g, const Planar3TreeMeta& meta, int outer_index);

}  // namespace mcc
