#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mcc/graph.hpp"

namespace mcc {

/// Wheel on n >= 4 vertices: center 0, rim 1..n-1 in cyclic order.
Graph gen_wheel(int n);

/// Double wheel on n >= 5 vertices: centers 0 and 1, rim 2..n-1 in cyclic
/// order. The centers are adjacent only when `centers_adjacent` is set.
Graph gen_double_wheel(int n, bool centers_adjacent = false);

struct SnowflakeMeta {
  int height = 0;
  std::vector<int> vertex_height;
  /// p(v): the ancestor one height below v; -1 at height 0.
  std::vector<Vertex> parent;
  /// The other ancestor, at height < height(v) - 1 (both ancestors are at
  /// height 0 for the first ring); -1 at height 0.
  std::vector<Vertex> second_ancestor;
};

/// Snowflake S_h: a triangle grown h times by attaching a length-2 path on
/// every outer edge. n = 3 * 2^h.
std::pair<Graph, SnowflakeMeta> gen_snowflake(int h);

struct Fan {
  Vertex apex = -1;
  /// Rim path from v_{i-1} to v_{i+1}; interior entries are the fan vertices.
  std::vector<Vertex> rim;

  int size() const { return static_cast<int>(rim.size()) + 1; }
};

struct OuterpathMeta {
  std::vector<Vertex> spine;  // v_1..v_k
  Vertex first_end = -1;      // v_0
  Vertex last_end = -1;       // v_{k+1}
  std::vector<Fan> fans;      // f_1..f_k

  std::vector<int> fan_sizes() const;
};

/// Outerpath with the given fan sizes |f_1|..|f_k| (vertex counts including
/// the apex and both rim ends). Middle fans need size >= 3 and end fans
/// size >= 4; a single fan needs size >= 5 so that its apex has degree 4.
/// Spine vertices are numbered first, then fan vertices fan by fan.
std::pair<Graph, OuterpathMeta> gen_outerpath(std::span<const int> fan_sizes);

/// Random fan sizes for an outerpath of maximum degree exactly `max_degree`
/// (>= 4), with 2..6 fans. Deterministic in `seed`.
std::vector<int> random_outerpath_fan_sizes(int max_degree, std::uint64_t seed);

/// Faces of a complete planar 3-tree stored as a complete ternary tree in
/// heap order: face f has children 3f+1, 3f+2, 3f+3, where child j replaces
/// corner j of f by the center of f. The root face 0 is the outer triangle.
/// Faces of depth < k carry the center vertex 3 + f; faces of depth k are
/// the (empty) triangular faces of the graph.
class Planar3TreeMeta {
 public:
  Planar3TreeMeta() = default;
  explicit Planar3TreeMeta(int k);

  int levels() const { return k_; }
  std::array<Vertex, 3> outer() const { return {0, 1, 2}; }
  int num_vertices() const;
  std::size_t num_faces() const { return corners_.size(); }

  const std::array<Vertex, 3>& corners(std::size_t face) const { return corners_[face]; }
  int depth(std::size_t face) const;
  bool is_empty(std::size_t face) const { return depth(face) == k_; }
  /// Center vertex of a non-empty face.
  Vertex center(std::size_t face) const { return static_cast<Vertex>(face) + 3; }
  static std::size_t child(std::size_t face, int j) { return 3 * face + 1 + j; }
  /// Face whose center is v (v >= 3).
  static std::size_t face_of_center(Vertex v) { return static_cast<std::size_t>(v) - 3; }

  int vertex_level(Vertex v) const;

  /// Central path inside `face` for the corner pair that omits corner
  /// `omitted`: the centers of face, child(face, omitted), ... down to the
  /// last non-empty face. Has k - depth(face) vertices.
  std::vector<Vertex> central_path(std::size_t face, int omitted) const;

 private:
  int k_ = 0;
  std::vector<std::size_t> depth_offset_;  // first face index of each depth
  std::vector<std::array<Vertex, 3>> corners_;
};

/// Complete planar 3-tree T_k with (3^k + 5) / 2 vertices; outer vertices
/// 0, 1, 2; levels recorded on the graph. Supports k <= 15.
std::pair<Graph, Planar3TreeMeta> gen_complete_3tree(int k);

/// Uniformly random triangulation of the convex n-gon 0..n-1 (n >= 3).
Graph gen_random_mop(int n, std::uint64_t seed);

}  // namespace mcc
