#pragma once

#include <cstdint>
#include <optional>

#include "mcc/graph.hpp"

namespace mcc {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

struct OracleOptions {
  /// Search-tree nodes allowed across all phases; exceeding it throws
  /// BudgetExhausted. Unset means kDefaultOracleBudget.
  std::optional<std::uint64_t> budget;
  /// Workers for the optimization phase. The witness phase is sequential,
  /// so results do not depend on this value.
  int threads = 1;
};

struct OracleResult {
  int value = 0;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
};

/// Exact mcc_t(g) by branch and bound over colorings in BFS vertex order.
/// The witness is the first optimal coloring in search order.
OracleResult exact_mcc(const Graph& g, int t, const OracleOptions& options = {});

/// True iff some t-coloring of g has every monochromatic component of size <= m.
bool exact_mcc_decision(const Graph& g, int t, int m, const OracleOptions& options = {});

}  // namespace mcc
