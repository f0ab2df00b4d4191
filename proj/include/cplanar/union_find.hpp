#pragma once

#include <numeric>
#include <vector>

namespace cplanar {

/// Disjoint sets with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    size_.push_back(1);
    ++sets_;
    return parent_.back();
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when x and y were already in the same set.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
  }

  bool same(int x, int y) { return find(x) == find(y); }
  int size() const { return static_cast<int>(parent_.size()); }
  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

/// Union-find without path compression so unions can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      history_.push_back(-1);
      return false;
    }
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    history_.push_back(y);
    return true;
  }

  void rollback() {
    const int y = history_.back();
    history_.pop_back();
    if (y < 0) return;
    const int x = parent_[y];
    size_[x] -= size_[y];
    parent_[y] = y;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

}  // namespace cplanar
