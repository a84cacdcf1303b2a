#include "mcc/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

std::size_t isqrt_floor(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::size_t isqrt_ceil(std::size_t x) {
  std::size_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

namespace {

SchemeResult finish(const Graph& g, Coloring coloring, std::size_t bound) {
  SchemeResult out;
  out.report = monochromatic_components(g, coloring);
  out.coloring = std::move(coloring);
  out.claimed_bound = bound;
  return out;
}

}  // namespace

std::optional<WheelStructure> detect_wheel(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 4 || g.num_edges() != static_cast<std::size_t>(2 * (n - 1))) return std::nullopt;
  Vertex center = -1;
  for (Vertex v = 0; v < n && center < 0; ++v)
    if (g.degree(v) == n - 1) center = v;
  if (center < 0) return std::nullopt;

  WheelStructure w;
  w.center = center;
  Vertex start = center == 0 ? 1 : 0;
  Vertex prev = -1, cur = start;
  do {
    w.rim.push_back(cur);
    Vertex next = -1;
    int rim_degree = 0;
    for (Vertex y : g.neighbors(cur)) {
      if (y == center) continue;
      ++rim_degree;
      if (y != prev && next < 0) next = y;
    }
    if (rim_degree != 2) return std::nullopt;
    prev = cur;
    cur = next;
  } while (cur != start && static_cast<int>(w.rim.size()) < n);
  if (static_cast<int>(w.rim.size()) != n - 1 || cur != start) return std::nullopt;
  return w;
}

SchemeResult color_wheel(const Graph& g) {
  auto wheel = detect_wheel(g);
  if (!wheel) throw InvalidInput("graph is not a wheel");
  const std::size_t n = g.num_vertices();
  const std::size_t rim = wheel->rim.size();
  const std::size_t blacks = isqrt_floor(n);

  Coloring c{2, std::vector<Color>(n, 1)};
  c.colors[wheel->center] = 0;
  for (std::size_t i = 0; i < blacks; ++i) c.colors[wheel->rim[i * rim / blacks]] = 0;
  return finish(g, std::move(c), std::max(blacks + 1, isqrt_ceil(n) + 1));
}

SchemeResult color_snowflake(const Graph& g, const SnowflakeMeta& meta) {
  const int n = g.num_vertices();
  if (static_cast<int>(meta.vertex_height.size()) != n || static_cast<int>(meta.parent.size()) != n ||
      static_cast<int>(meta.second_ancestor.size()) != n)
    throw InvalidInput("snowflake ancestor metadata missing or sized for a different graph");
  if (meta.height < 1) throw InvalidInput("snowflake coloring needs height >= 1 (maximum degree >= 4)");

  std::vector<Vertex> by_height(n);
  for (Vertex v = 0; v < n; ++v) by_height[v] = v;
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](Vertex a, Vertex b) { return meta.vertex_height[a] < meta.vertex_height[b]; });

  Coloring c{2, std::vector<Color>(n, 0)};
  for (Vertex v : by_height) {
    if (meta.vertex_height[v] == 0) continue;
    const Vertex p = meta.parent[v], q = meta.second_ancestor[v];
    if (p < 0 || q < 0 || !g.has_edge(v, p) || !g.has_edge(v, q))
      throw InvalidInput("snowflake ancestors of vertex " + std::to_string(v) + " are not its neighbors");
    c.colors[v] = c.colors[p] == c.colors[q] ? 1 - c.colors[p] : c.colors[p];
  }

  const int published = max_degree(g) - 3;
  SchemeResult out = finish(g, std::move(c), static_cast<std::size_t>(std::max(3, published)));
  if (out.report.max_component > static_cast<std::size_t>(std::max(published, 0)))
    out.bound_exception = "monochromatic height-0 triangle of size 3 exceeds Delta-3 = " +
                          std::to_string(published);
  return out;
}

SchemeResult color_outerpath(const Graph& g, const OuterpathMeta& meta) {
  const int n = g.num_vertices();
  const int k = static_cast<int>(meta.spine.size());
  if (k == 0 || static_cast<int>(meta.fans.size()) != k || meta.first_end < 0 || meta.last_end < 0)
    throw InvalidInput("outerpath spine/fan metadata missing");
  for (const auto& fan : meta.fans)
    for (Vertex r : fan.rim)
      if (r < 0 || r >= n || !g.has_edge(fan.apex, r))
        throw InvalidInput("outerpath fan metadata does not match the graph");

  const Color black = 0, white = 1;
  Coloring c{2, std::vector<Color>(n, -1)};
  // v_1, v_2 black; v_3, v_4 white; ...
  for (int i = 1; i <= k; ++i) c.colors[meta.spine[i - 1]] = ((i - 1) / 2) % 2 == 0 ? black : white;
  c.colors[meta.first_end] = white;
  {
    const Color ck = c.colors[meta.spine[k - 1]];
    const Color prev = k >= 2 ? c.colors[meta.spine[k - 2]] : c.colors[meta.first_end];
    c.colors[meta.last_end] = ck == prev ? 1 - ck : ck;
  }

  for (const auto& fan : meta.fans) {
    const int interior = static_cast<int>(fan.rim.size()) - 2;
    if (interior <= 0) continue;
    const Color apex = c.colors[fan.apex];
    const Color opposite = 1 - apex;
    // The interior vertex next to the differently colored rim end shields
    // it; walk away from there.
    std::vector<Vertex> walk(fan.rim.begin() + 1, fan.rim.end() - 1);
    if (c.colors[fan.rim.front()] == apex) std::reverse(walk.begin(), walk.end());
    c.colors[walk[0]] = apex;
    const std::size_t block = isqrt_ceil(static_cast<std::size_t>(fan.size()));
    for (std::size_t j = 1; j < walk.size(); ++j)
      c.colors[walk[j]] = (j % (block + 1) == 0) ? apex : opposite;
  }

  for (Vertex v = 0; v < n; ++v)
    if (c.colors[v] < 0) throw InvalidInput("outerpath metadata leaves vertex " + std::to_string(v) + " uncovered");
  const std::size_t delta = static_cast<std::size_t>(max_degree(g));
  return finish(g, std::move(c), 4 * (isqrt_ceil(delta) + 1));
}

}  // namespace mcc
