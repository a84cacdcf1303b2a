#include "mcc/outerplanar_dp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "mcc/errors.hpp"

namespace mcc {

int DpState::worst() const { return std::max({size_u, size_v, free_black, free_white}); }

namespace {

std::uint64_t pack(const DpState& s) {
  return (static_cast<std::uint64_t>(s.color_u) << 61) | (static_cast<std::uint64_t>(s.color_v) << 60) |
         (static_cast<std::uint64_t>(s.size_u) << 45) | (static_cast<std::uint64_t>(s.size_v) << 30) |
         (static_cast<std::uint64_t>(s.free_black) << 15) | static_cast<std::uint64_t>(s.free_white);
}

void sort_table(DpTable& table) {
  std::vector<std::size_t> perm(table.states.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return table.states[a] < table.states[b]; });
  DpTable sorted{table.node, {}, {}};
  sorted.states.reserve(perm.size());
  sorted.witness.reserve(perm.size());
  for (std::size_t i : perm) {
    sorted.states.push_back(table.states[i]);
    sorted.witness.push_back(table.witness[i]);
  }
  table = std::move(sorted);
}

void drop_dominated(DpTable& table) {
  // Sorted order groups equal (colors, pole sizes) and orders free_black
  // ascending inside a group, so one sweep keeps the Pareto front.
  DpTable kept{table.node, {}, {}};
  std::size_t i = 0;
  while (i < table.states.size()) {
    std::size_t j = i;
    const DpState& head = table.states[i];
    int best_white = std::numeric_limits<int>::max();
    while (j < table.states.size() && table.states[j].color_u == head.color_u &&
           table.states[j].color_v == head.color_v && table.states[j].size_u == head.size_u &&
           table.states[j].size_v == head.size_v) {
      if (table.states[j].free_white < best_white) {
        best_white = table.states[j].free_white;
        kept.states.push_back(table.states[j]);
        kept.witness.push_back(table.witness[j]);
      }
      ++j;
    }
    i = j;
  }
  table = std::move(kept);
}

/// Every combination of a left part with poles (u, w) and a right part with
/// poles (w, v), first witness kept.
DpTable combine_tables(int node, std::span<const DpState> left, std::span<const DpState> right,
                       int cap) {
  DpTable out;
  out.node = node;
  std::unordered_map<std::uint64_t, int> index;
  for (int li = 0; li < static_cast<int>(left.size()); ++li) {
    for (int ri = 0; ri < static_cast<int>(right.size()); ++ri) {
      if (right[ri].color_u != left[li].color_v) continue;
      auto merged = combine_two_children(left[li], right[ri], cap);
      if (!merged) continue;
      auto [it, inserted] = index.emplace(pack(*merged), static_cast<int>(out.states.size()));
      if (!inserted) continue;
      out.states.push_back(*merged);
      out.witness.push_back({li, ri, left[li].color_v});
    }
  }
  sort_table(out);
  return out;
}

}  // namespace

const std::array<DpState, 4>& edge_states() {
  static const std::array<DpState, 4> states{
      DpState{kBlack, kBlack, 2, 2, 0, 0},
      DpState{kBlack, kWhite, 1, 1, 0, 0},
      DpState{kWhite, kBlack, 1, 1, 0, 0},
      DpState{kWhite, kWhite, 2, 2, 0, 0},
  };
  return states;
}

DpTable leaf_table(std::array<Vertex, 3> /*face*/, int cap) {
  const auto& e = edge_states();
  return combine_tables(-1, e, e, cap);
}

std::optional<DpState> combine_two_children(const DpState& s1, const DpState& s2, int cap) {
  if (s1.color_v != s2.color_u) return std::nullopt;
  const Color cu = s1.color_u, cw = s1.color_v, cv = s2.color_v;

  // The two parts meet only in w; w's pieces fuse and w is counted once.
  const int w_piece = s1.size_v + s2.size_u - 1;
  DpState out;
  out.color_u = cu;
  out.color_v = cv;
  out.size_u = (cu == cw) ? w_piece : s1.size_u;
  out.size_v = (cv == cw) ? w_piece : s2.size_v;
  out.free_black = std::max(s1.free_black, s2.free_black);
  out.free_white = std::max(s1.free_white, s2.free_white);

  if (cu == cv) {
    // Attachment edge (u, v) joins the pole components.
    if (cu != cw) out.size_u = out.size_v = s1.size_u + s2.size_v;
    else out.size_u = out.size_v = w_piece;
  }
  if (cw != cu && cw != cv) {
    int& slot = (cw == kBlack) ? out.free_black : out.free_white;
    slot = std::max(slot, w_piece);
  }
  if (out.size_u > cap || out.size_v > cap || out.free_black > cap || out.free_white > cap)
    return std::nullopt;
  return out;
}

std::optional<DpState> combine_one_child(const DpState& child, ChildSide side,
                                         Color new_vertex_color, int cap) {
  if (side == ChildSide::kLeft) {
    // Child on (u, w); the new vertex v closes edge (w, v).
    const DpState& edge = edge_states()[2 * child.color_v + new_vertex_color];
    return combine_two_children(child, edge, cap);
  }
  const DpState& edge = edge_states()[2 * new_vertex_color + child.color_u];
  return combine_two_children(edge, child, cap);
}

DpRun run_dp(const Graph& g, const DpOptions& options) {
  DpRun run;
  run.tree = build_weak_dual(g);
  run.cap = options.cap > 0 ? options.cap : 2 * max_degree(g);
  if (run.cap >= (1 << 15)) throw InvalidParameter("cap " + std::to_string(run.cap) + " too large");
  run.tables.resize(run.tree.nodes.size());
  const auto& edges = edge_states();
  for (auto it = run.tree.order.rbegin(); it != run.tree.order.rend(); ++it) {
    const int id = *it;
    const DualNode& node = run.tree.nodes[id];
    std::span<const DpState> left =
        node.left >= 0 ? std::span<const DpState>(run.tables[node.left].states) : edges;
    std::span<const DpState> right =
        node.right >= 0 ? std::span<const DpState>(run.tables[node.right].states) : edges;
    run.tables[id] = combine_tables(id, left, right, run.cap);
    if (options.prune_dominated) drop_dominated(run.tables[id]);
  }
  return run;
}

std::vector<std::pair<Vertex, Color>> reconstruct(const DpRun& run, int node, int index) {
  std::vector<std::pair<Vertex, Color>> out;
  std::vector<std::pair<int, int>> stack{{node, index}};
  while (!stack.empty()) {
    auto [id, idx] = stack.back();
    stack.pop_back();
    const DualNode& d = run.tree.nodes[id];
    const DpState& s = run.tables[id].states[idx];
    const DpWitness& wit = run.tables[id].witness[idx];
    out.emplace_back(d.u, s.color_u);
    out.emplace_back(d.v, s.color_v);
    out.emplace_back(d.w, wit.apex_color);
    if (d.left >= 0) stack.emplace_back(d.left, wit.left);
    if (d.right >= 0) stack.emplace_back(d.right, wit.right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DpState state_of_coloring(const Graph& g, const WeakDualTree& tree, int node,
                          const std::vector<Color>& colors) {
  const auto verts = subtree_vertices(tree, node);
  Graph sub = induced_subgraph(g, verts);
  Coloring local{2, {}};
  for (Vertex v : verts) local.colors.push_back(colors[v]);
  auto report = monochromatic_components(sub, local);
  const DualNode& d = tree.nodes[node];
  auto local_id = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  const Vertex lu = local_id(d.u), lv = local_id(d.v);
  DpState s;
  s.color_u = colors[d.u];
  s.color_v = colors[d.v];
  for (const auto& comp : report.components) {
    const int size = static_cast<int>(comp.vertices.size());
    bool has_u = std::binary_search(comp.vertices.begin(), comp.vertices.end(), lu);
    bool has_v = std::binary_search(comp.vertices.begin(), comp.vertices.end(), lv);
    if (has_u) s.size_u = size;
    if (has_v) s.size_v = size;
    if (!has_u && !has_v) {
      int& slot = comp.color == kBlack ? s.free_black : s.free_white;
      slot = std::max(slot, size);
    }
  }
  return s;
}

Mcc2Solution solve_mcc2(const Graph& g, const DpOptions& options) {
  const int n = g.num_vertices();
  if (n == 3) {
    build_weak_dual(g);  // recognition only
    Mcc2Solution best{n + 1, {2, {}}};
    for (int mask = 0; mask < 8; ++mask) {
      Coloring c{2, {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}};
      int value = static_cast<int>(monochromatic_components(g, c, false).max_component);
      if (value < best.value) best = {value, c};
    }
    return best;
  }

  DpRun run = run_dp(g, options);
  const DpTable& root = run.tables[run.tree.root];
  if (root.states.empty())
    throw Error("no coloring fits within cap " + std::to_string(run.cap));
  int best = 0;
  for (int i = 1; i < static_cast<int>(root.states.size()); ++i)
    if (root.states[i].worst() < root.states[best].worst()) best = i;

  Mcc2Solution sol;
  sol.value = root.states[best].worst();
  sol.coloring = {2, std::vector<Color>(n, kBlack)};
  for (auto [v, c] : reconstruct(run, run.tree.root, best)) sol.coloring.colors[v] = c;
  return sol;
}

}  // namespace mcc
