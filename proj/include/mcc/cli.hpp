#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcc/generators.hpp"
#include "mcc/graph.hpp"

namespace mcc {

/// Process exit codes of the mcc tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitBudgetExhausted = 3,
};

/// Builds a family member from the parameters stored in its family tag.
Graph generate_family(const std::string& family, const nlohmann::json& params);

struct AlgoOptions {
  std::optional<int> colors;
  std::optional<std::uint64_t> budget;
  int threads = 1;
  bool full_tables = false;
};

struct AlgoOutcome {
  Coloring coloring;
  MccReport report;
  std::optional<std::size_t> claimed_bound;
  /// Set when the algorithm reports an optimum (dp2, oracle).
  std::optional<int> value;
  std::optional<std::string> note;
};

inline const std::vector<std::string> kAlgorithms = {"dp2",        "oracle",     "wheel2",    "snowflake2",
                                                     "outerpath2", "tree3-3col", "tree3-2col"};

/// Runs `algo` on `g` and re-derives the report from the coloring. Schemes
/// that need family metadata recover it by regenerating the family from the
/// graph's tag; a missing or mismatching tag throws InvalidInput.
AlgoOutcome run_algorithm(const Graph& g, const std::string& algo, const AlgoOptions& options);

struct BenchRecord {
  std::string family;
  nlohmann::json params;
  int n = 0;
  int delta = 0;
  std::string algorithm;
  std::size_t max_component = 0;
  std::optional<std::size_t> claimed_bound;
  double wall_time_ms = 0.0;
};

inline constexpr const char* kBenchCsvHeader =
    "family,params,n,delta,algorithm,max_component,claimed_bound,wall_time_ms";

std::string bench_csv_row(const BenchRecord& r);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Root mean square of the residuals in log space.
  double residual = 0.0;
  std::size_t points = 0;
};

/// Least-squares line through (log x, log y). Needs two distinct x values
/// and positive data.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// "a..b" (inclusive) or "a,b,c". Throws InvalidParameter when malformed or empty.
std::vector<std::int64_t> parse_range(const std::string& text);

struct BenchSpec {
  std::string family;
  std::string algorithm;
  /// Values of the family's size parameter: n (wheel, double-wheel,
  /// random-mop), h (snowflake), k (complete-3tree) or the maximum degree
  /// (outerpath, random fan sizes).
  std::vector<std::int64_t> values;
  std::uint64_t seed = 1;
  AlgoOptions options;
};

/// One record per value, in order. Throws InvalidParameter on an empty range.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

/// Fit of max_component against delta for outerpaths and n otherwise.
LogLogFit fit_bench(const std::vector<BenchRecord>& records);

/// Entry point of the mcc tool; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcc
