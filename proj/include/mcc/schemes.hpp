#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcc/generators.hpp"
#include "mcc/graph.hpp"

namespace mcc {

/// A constructive coloring with the bound its scheme guarantees on this
/// instance, and the verified component report.
struct SchemeResult {
  Coloring coloring;
  std::size_t claimed_bound = 0;
  MccReport report;
  /// Set when the published bound for the scheme does not hold on this
  /// instance and claimed_bound was widened; explains why.
  std::optional<std::string> bound_exception;

  bool within_bound() const { return report.max_component <= claimed_bound; }
};

struct WheelStructure {
  Vertex center = -1;
  std::vector<Vertex> rim;  // cyclic order, starting at the smallest rim id
};

/// Center and rim of `g` if it is a wheel (on >= 4 vertices).
std::optional<WheelStructure> detect_wheel(const Graph& g);

/// Center plus floor(sqrt(n)) evenly spaced rim vertices black, rest white.
/// Throws InvalidInput when `g` is not a wheel.
SchemeResult color_wheel(const Graph& g);

/// Height-0 vertices black; every later vertex takes the opposite color when
/// its two ancestors agree and the color of p(v) otherwise. Needs h >= 1.
SchemeResult color_snowflake(const Graph& g, const SnowflakeMeta& meta);

/// Spine pairs alternate colors, v_0 is white, and each fan's interior is
/// split into opposite-color blocks by apex-colored separators.
SchemeResult color_outerpath(const Graph& g, const OuterpathMeta& meta);

/// floor(sqrt(x)) and ceil(sqrt(x)) on integers.
std::size_t isqrt_floor(std::size_t x);
std::size_t isqrt_ceil(std::size_t x);

}  // namespace mcc
