#include "mcc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "mcc/errors.hpp"
#include "mcc/union_find.hpp"

namespace mcc {

namespace {

std::vector<Vertex> bfs_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      Vertex x = order[head++];
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          order.push_back(y);
        }
    }
  }
  return order;
}

/// Shared, read-only description of the search space.
struct Problem {
  int n = 0;
  int t = 0;
  std::vector<Vertex> order;
  /// earlier[p]: positions q < p adjacent to order[p].
  std::vector<std::vector<int>> earlier;

  Problem(const Graph& g, int colors) : n(g.num_vertices()), t(colors), order(bfs_order(g)) {
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    earlier.resize(n);
    for (int p = 0; p < n; ++p)
      for (Vertex y : g.neighbors(order[p]))
        if (pos[y] < p) earlier[p].push_back(pos[y]);
  }
};

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (count_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_)
      throw BudgetExhausted("search exceeded budget of " + std::to_string(limit_) + " nodes");
  }
  std::uint64_t count() const { return count_.load(); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> count_{0};
};

/// Depth-first assignment over positions with a rollback union-find. Works
/// on positions; colors[p] is the color of order[p].
class Search {
 public:
  Search(const Problem& problem, BudgetCounter& budget)
      : problem_(problem), budget_(budget), uf_(problem.n), colors_(problem.n, -1) {}

  /// Assigns color c at position p; returns the new running maximum.
  int assign(int p, Color c, int running_max) {
    colors_[p] = c;
    int best = std::max(running_max, 1);
    for (int q : problem_.earlier[p])
      if (colors_[q] == c) best = std::max(best, static_cast<int>(uf_.unite(p, q)));
    return best;
  }

  /// Finds colorings with running maximum strictly below `bound()`; calls
  /// `found(max)` at each leaf that survives. `found` returns true to stop.
  template <typename Bound, typename Found>
  bool dfs(int p, int used, int running_max, const Bound& bound, const Found& found) {
    if (p == problem_.n) return found(running_max);
    const int top = std::min(problem_.t - 1, used);
    for (Color c = 0; c <= top; ++c) {
      budget_.tick();
      const std::size_t mark = uf_.checkpoint();
      const int next = assign(p, c, running_max);
      bool stop = false;
      if (next < bound()) stop = dfs(p + 1, std::max(used, c + 1), next, bound, found);
      uf_.rollback(mark);
      colors_[p] = -1;
      if (stop) return true;
    }
    return false;
  }

  const std::vector<Color>& colors() const { return colors_; }

 private:
  const Problem& problem_;
  BudgetCounter& budget_;
  RollbackUnionFind uf_;
  std::vector<Color> colors_;
};

struct Prefix {
  std::vector<Color> colors;
  int used = 0;
};

/// Canonical color prefixes of the first `depth` positions.
std::vector<Prefix> enumerate_prefixes(const Problem& problem, int depth) {
  std::vector<Prefix> out{{{}, 0}};
  for (int p = 0; p < depth; ++p) {
    std::vector<Prefix> grown;
    for (const auto& pre : out)
      for (Color c = 0; c <= std::min(problem.t - 1, pre.used); ++c) {
        Prefix next = pre;
        next.colors.push_back(c);
        next.used = std::max(pre.used, c + 1);
        grown.push_back(std::move(next));
      }
    out = std::move(grown);
  }
  return out;
}

/// Smallest achievable maximum component, assuming `upper` is achievable.
int optimize(const Problem& problem, int upper, int threads, BudgetCounter& budget) {
  if (threads <= 1 || problem.n < 4) {
    int best = upper;
    Search search(problem, budget);
    search.dfs(0, 0, 0, [&] { return best; },
               [&](int value) {
                 best = value;
                 return false;
               });
    return best;
  }

  int depth = 0;
  while (depth < problem.n - 1 && enumerate_prefixes(problem, depth).size() < 8u * threads) ++depth;
  const auto prefixes = enumerate_prefixes(problem, depth);
  std::atomic<int> best{upper};
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < prefixes.size(); i = next++) {
        Search search(problem, budget);
        int running = 0;
        for (int p = 0; p < depth; ++p) running = search.assign(p, prefixes[i].colors[p], running);
        if (running < best.load()) {
          search.dfs(depth, prefixes[i].used, running, [&] { return best.load(); },
                     [&](int value) {
                       int cur = best.load();
                       while (value < cur && !best.compare_exchange_weak(cur, value)) {
                       }
                       return false;
                     });
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = prefixes.size();
    }
  };
  std::vector<std::jthread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
  return best.load();
}

/// First coloring in search order with every component <= m, if any.
std::optional<std::vector<Color>> first_within(const Problem& problem, int m, BudgetCounter& budget) {
  Search search(problem, budget);
  std::optional<std::vector<Color>> hit;
  search.dfs(0, 0, 0, [&] { return m + 1; },
             [&](int) {
               hit = search.colors();
               return true;
             });
  if (!hit) return std::nullopt;
  std::vector<Color> by_vertex(problem.n);
  for (int p = 0; p < problem.n; ++p) by_vertex[problem.order[p]] = (*hit)[p];
  return by_vertex;
}

void check_colors(int t) {
  if (t < 1) throw InvalidParameter("number of colors must be >= 1");
}

}  // namespace

OracleResult exact_mcc(const Graph& g, int t, const OracleOptions& options) {
  check_colors(t);
  const Problem problem(g, t);
  BudgetCounter budget(options.budget.value_or(kDefaultOracleBudget));
  OracleResult result;
  result.witness.t = t;
  if (problem.n == 0) return result;

  // One color class is always achievable.
  const int upper = static_cast<int>(largest_connected_component(g));
  result.value = optimize(problem, upper, std::max(1, options.threads), budget);
  auto witness = first_within(problem, result.value, budget);
  if (!witness) throw Error("oracle witness phase failed to reproduce the optimum");
  result.witness.colors = std::move(*witness);
  result.nodes_explored = budget.count();
  return result;
}

bool exact_mcc_decision(const Graph& g, int t, int m, const OracleOptions& options) {
  check_colors(t);
  const Problem problem(g, t);
  if (problem.n == 0) return true;
  if (m < 1) return false;
  BudgetCounter budget(options.budget.value_or(kDefaultOracleBudget));
  return first_within(problem, m, budget).has_value();
}

}  // namespace mcc
