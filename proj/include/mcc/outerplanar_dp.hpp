#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mcc/graph.hpp"
#include "mcc/weak_dual.hpp"

namespace mcc {

inline constexpr Color kBlack = 0;
inline constexpr Color kWhite = 1;

/// Equivalence class of 2-colorings of G(mu) with respect to its poles (u, v).
struct DpState {
  Color color_u = kBlack;
  Color color_v = kBlack;
  int size_u = 1;      // component of u inside G(mu)
  int size_v = 1;      // component of v inside G(mu)
  int free_black = 0;  // largest black component avoiding u and v
  int free_white = 0;  // largest white component avoiding u and v

  int worst() const;
  auto operator<=>(const DpState&) const = default;
};

/// How a state was produced: indices into the left part's table (child on
/// (u, w), or the edge table when there is no such child) and the right
/// part's table (child on (w, v), or the edge table).
struct DpWitness {
  int left = -1;
  int right = -1;
  Color apex_color = kBlack;
};

/// Reachable states of one dual-tree node, sorted lexicographically, each
/// with the first witness found.
struct DpTable {
  int node = -1;
  std::vector<DpState> states;
  std::vector<DpWitness> witness;
};

/// The four states of a single edge (a, b) with poles a, b, in lexicographic order.
const std::array<DpState, 4>& edge_states();

/// States of a lone triangle face (u, v, w) with poles u, v. The face ids are
/// carried for bookkeeping only; the table depends on the colors alone.
DpTable leaf_table(std::array<Vertex, 3> face, int cap);

/// G(mu) = G(mu1) + G(mu2) + edge (u, v), where s1 has poles (u, w) and s2
/// has poles (w, v). Empty when w is colored inconsistently or any size
/// exceeds cap.
std::optional<DpState> combine_two_children(const DpState& s1, const DpState& s2, int cap);

enum class ChildSide { kLeft, kRight };

/// A single child hanging on (u, w) (kLeft; the new vertex is v) or on
/// (w, v) (kRight; the new vertex is u). The new vertex is adjacent to both
/// poles of the child.
std::optional<DpState> combine_one_child(const DpState& child, ChildSide side,
                                         Color new_vertex_color, int cap);

struct DpOptions {
  /// Upper bound on every tracked size; 0 selects 2 * max_degree.
  int cap = 0;
  /// Drop states whose free sizes are dominated by another state with the
  /// same pole colors and pole sizes. Exact, and much smaller tables; turn
  /// off to keep every reachable state.
  bool prune_dominated = true;
};

struct DpRun {
  WeakDualTree tree;
  std::vector<DpTable> tables;  // indexed by node
  int cap = 0;
};

/// Bottom-up table construction over the weak dual of `g`.
DpRun run_dp(const Graph& g, const DpOptions& options = {});

/// Colors of the vertices of G(node) realizing `tables[node].states[index]`.
std::vector<std::pair<Vertex, Color>> reconstruct(const DpRun& run, int node, int index);

/// The state of an explicit coloring of G(node); vertices outside G(node)
/// are ignored. Independent of the tables, used to audit them.
DpState state_of_coloring(const Graph& g, const WeakDualTree& tree, int node,
                          const std::vector<Color>& colors);

struct Mcc2Solution {
  int value = 0;
  Coloring coloring;
};

/// Exact mcc_2 of a maximal outerplanar graph with an optimal coloring.
/// Throws RecognitionError when `g` is not maximal outerplanar.
Mcc2Solution solve_mcc2(const Graph& g, const DpOptions& options = {});

}  // namespace mcc
