#include "mcc/tree3.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

void check_meta(const Graph& g, const Planar3TreeMeta& meta) {
  if (meta.num_vertices() != g.num_vertices())
    throw InvalidInput("complete 3-tree metadata (k=" + std::to_string(meta.levels()) +
                       ") does not match a graph with " + std::to_string(g.num_vertices()) + " vertices");
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

class ThreeColorer {
 public:
  ThreeColorer(const Planar3TreeMeta& meta, std::vector<Color>& colors, std::vector<int>& steps)
      : meta_(meta), colors_(colors), steps_(steps) {}

  void run(std::size_t face) {
    if (meta_.is_empty(face)) return;
    const auto& corners = meta_.corners(face);
    bool present[3] = {false, false, false};
    for (Vertex x : corners) present[colors_[x]] = true;
    Color missing = 0;
    while (present[missing]) ++missing;
    const int step = next_step_++;

    mark(meta_.center(face), missing, step);
    for (int m = 0; m < 3; ++m) {
      for (std::size_t f = Planar3TreeMeta::child(face, m); !meta_.is_empty(f);
           f = Planar3TreeMeta::child(f, m)) {
        mark(meta_.center(f), missing, step);
        // The two children of f that leave the path are side triangles.
        for (int j = 0; j < 3; ++j)
          if (j != m) run(Planar3TreeMeta::child(f, j));
      }
    }
  }

 private:
  void mark(Vertex v, Color c, int step) {
    colors_[v] = c;
    steps_[v] = step;
  }

  const Planar3TreeMeta& meta_;
  std::vector<Color>& colors_;
  std::vector<int>& steps_;
  int next_step_ = 2;
};

class TwoColorer {
 public:
  TwoColorer(const Planar3TreeMeta& meta, std::vector<Color>& colors) : meta_(meta), colors_(colors) {}

  /// All corners of `face` share a color and its interior is uncolored.
  void run(std::size_t face) {
    if (meta_.is_empty(face)) return;
    const auto& corners = meta_.corners(face);
    const Color outer = colors_[corners[0]];
    const Color other = 1 - outer;
    auto touches_corner = [&](std::size_t f) {
      for (Vertex x : meta_.corners(f))
        if (x == corners[0] || x == corners[1] || x == corners[2]) return true;
      return false;
    };

    // Neighbors of the corners are exactly the centers of faces that keep
    // one of the corners.
    std::vector<std::size_t> stack{face};
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      if (meta_.is_empty(f) || !touches_corner(f)) continue;
      colors_[meta_.center(f)] = other;
      for (int j = 0; j < 3; ++j) stack.push_back(Planar3TreeMeta::child(f, j));
    }

    std::vector<std::size_t> inner;
    stack.assign({face});
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      if (meta_.is_empty(f)) continue;
      const auto& c = meta_.corners(f);
      const bool mono = colors_[c[0]] == colors_[c[1]] && colors_[c[1]] == colors_[c[2]];
      if (f != face && mono) {
        if (colors_[meta_.center(f)] >= 0)
          throw std::logic_error("monochromatic triangle with colored interior at face " + std::to_string(f));
        inner.push_back(f);
        continue;
      }
      if (f != face && colors_[meta_.center(f)] < 0)
        throw std::logic_error("non-monochromatic triangle with uncolored interior at face " + std::to_string(f));
      for (int j = 0; j < 3; ++j) stack.push_back(Planar3TreeMeta::child(f, j));
    }
    for (std::size_t f : inner) run(f);
  }

 private:
  const Planar3TreeMeta& meta_;
  std::vector<Color>& colors_;
};

}  // namespace

LevelPlan plan_levels(int k) {
  if (k < 0) throw InvalidParameter("plan_levels needs k >= 0");
  LevelPlan best;
  best.bound = std::numeric_limits<std::int64_t>::max();
  for (int l = 0; l <= k; ++l) {
    const std::int64_t n1 = (ipow(3, l) + 5) / 2;
    const std::int64_t n2 = 3 * ipow(2, k - l) - 3 * (k - l) - 2;
    const std::int64_t bound = std::max(n1, n2);
    if (bound < best.bound) best = {k, l, n1, n2, bound};
  }
  return best;
}

SchemeResult color_3tree_3colors(const Graph& g, const Planar3TreeMeta& meta, std::vector<int>* step_of_vertex) {
  check_meta(g, meta);
  const int n = g.num_vertices();
  std::vector<Color> colors(n, -1);
  std::vector<int> steps(n, -1);
  colors[0] = colors[1] = 0;
  colors[2] = 1;
  steps[0] = steps[1] = 0;
  steps[2] = 1;
  ThreeColorer(meta, colors, steps).run(0);

  SchemeResult out;
  out.coloring = {3, std::move(colors)};
  out.report = monochromatic_components(g, out.coloring);
  const int k = meta.levels();
  const std::int64_t published = 3 * static_cast<std::int64_t>(k) - 2;
  // The two outer vertices sharing c1 are adjacent, so 2 is a floor.
  out.claimed_bound = static_cast<std::size_t>(std::max<std::int64_t>(2, published));
  if (k >= 1 && published < 2)
    out.bound_exception = "adjacent outer vertices share a color; 3k-2 = " + std::to_string(published) +
                          " is below 2";
  if (step_of_vertex) *step_of_vertex = std::move(steps);
  return out;
}

bool components_match_steps(const MccReport& report, const std::vector<int>& step_of_vertex) {
  std::map<int, std::size_t> group_size;
  for (int s : step_of_vertex) ++group_size[s];
  std::map<int, int> seen;
  for (const auto& comp : report.components) {
    const int step = step_of_vertex[comp.vertices.front()];
    for (Vertex v : comp.vertices)
      if (step_of_vertex[v] != step) return false;
    if (comp.vertices.size() != group_size[step]) return false;
    if (++seen[step] > 1) return false;
  }
  return true;
}

PathWitness extract_monochromatic_path(const Graph& g, const Planar3TreeMeta& meta, const Coloring& c) {
  check_meta(g, meta);
  if (!validate_coloring(g, c, 3)) throw PreconditionError("path extraction needs a coloring with colors 0..2");
  std::vector<std::vector<Vertex>> paths(3);
  for (int i = 0; i < 3; ++i) paths[i].push_back(meta.outer()[i]);
  const Color a = c.colors[0], b = c.colors[1], d = c.colors[2];
  if (a == b || b == d || a == d) throw PreconditionError("outer vertices are not colored with three distinct colors");

  // Invariant: the corners of `face` are the current ends of the paths and
  // carry three distinct colors.
  std::size_t face = 0;
  while (!meta.is_empty(face)) {
    const Vertex w = meta.center(face);
    const auto& corners = meta.corners(face);
    int match = -1;
    for (int j = 0; j < 3; ++j)
      if (c.colors[corners[j]] == c.colors[w]) match = j;
    const Vertex end = corners[match];
    for (auto& p : paths)
      if (p.back() == end) p.push_back(w);
    face = Planar3TreeMeta::child(face, match);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (paths[i].size() > paths[best].size()) best = i;
  return {paths[best], c.colors[paths[best].front()]};
}

SchemeResult color_3tree_2colors(const Graph& g, const Planar3TreeMeta& meta) {
  check_meta(g, meta);
  const int n = g.num_vertices();
  const LevelPlan plan = plan_levels(meta.levels());
  std::vector<Color> colors(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (meta.vertex_level(v) <= plan.top_levels) colors[v] = 0;

  TwoColorer colorer(meta, colors);
  const std::size_t first = (ipow(3, plan.top_levels) - 1) / 2;
  const std::size_t last = (ipow(3, plan.top_levels + 1) - 1) / 2;
  for (std::size_t f = first; f < last; ++f) colorer.run(f);

  for (Vertex v = 0; v < n; ++v)
    if (colors[v] < 0) throw std::logic_error("vertex " + std::to_string(v) + " left uncolored");
  SchemeResult out;
  out.coloring = {2, std::move(colors)};
  out.report = monochromatic_components(g, out.coloring);
  out.claimed_bound = static_cast<std::size_t>(plan.bound);
  return out;
}

WheelWitness extract_outer_wheel(const Graph& g, const Planar3TreeMeta& meta, int outer_index) {
  check_meta(g, meta);
  if (outer_index < 1 || outer_index > 3) throw InvalidParameter("outer index must be 1, 2 or 3");
  if (meta.levels() < 1) throw PreconditionError("a complete 3-tree with 0 levels contains no wheel");
  const Vertex center = meta.outer()[outer_index - 1];

  // Rim edges: the other two corners of every triangular face at the center,
  // plus the outer edge opposite it.
  std::map<Vertex, std::vector<Vertex>> rim_adj;
  auto link = [&](Vertex x, Vertex y) {
    rim_adj[x].push_back(y);
    rim_adj[y].push_back(x);
  };
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    const auto& c = meta.corners(f);
    if (meta.is_empty(f)) {
      if (f == 0) continue;
      std::vector<Vertex> others;
      for (Vertex x : c)
        if (x != center) others.push_back(x);
      link(others[0], others[1]);
      continue;
    }
    for (int j = 0; j < 3; ++j)
      if (c[j] != center) stack.push_back(Planar3TreeMeta::child(f, j));
  }
  const auto outer = meta.outer();
  std::vector<Vertex> opposite;
  for (Vertex x : outer)
    if (x != center) opposite.push_back(x);
  link(opposite[0], opposite[1]);

  WheelWitness out;
  out.original.push_back(center);
  Vertex prev = -1, cur = opposite[0];
  do {
    out.original.push_back(cur);
    const auto& nb = rim_adj.at(cur);
    if (nb.size() != 2) throw std::logic_error("rim vertex " + std::to_string(cur) + " has rim degree != 2");
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  } while (cur != opposite[0]);

  const int size = static_cast<int>(out.original.size());
  out.wheel = Graph(size);
  for (int i = 1; i < size; ++i) {
    if (!g.has_edge(center, out.original[i]) || !g.has_edge(out.original[i], out.original[i % (size - 1) + 1]))
      throw std::logic_error("extracted wheel edge missing from the graph");
    out.wheel.add_edge(0, i);
    out.wheel.add_edge(i, i % (size - 1) + 1);
  }
  out.wheel.set_family({"wheel", {{"n", size}}});
  return out;
}

}  // namespace mcc
