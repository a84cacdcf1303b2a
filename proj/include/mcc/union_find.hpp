#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace mcc {

/// Disjoint sets with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns the root of the merged set.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

  std::size_t size_of(int x) { return size_[find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<std::size_t> size_;
};

/// Union by size without path compression, so every union can be undone in
/// LIFO order. find() is O(log n).
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Merges the sets of a and b and returns the size of the result. A no-op
  /// union is still recorded so that checkpoints count operations uniformly.
  std::size_t unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back({-1, -1});
      return size_[a];
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back({a, b});
    return size_[a];
  }

  std::size_t size_of(int x) const { return size_[find(x)]; }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      auto [a, b] = history_.back();
      history_.pop_back();
      if (a < 0) continue;
      parent_[b] = b;
      size_[a] -= size_[b];
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::pair<int, int>> history_;
};

}  // namespace mcc
