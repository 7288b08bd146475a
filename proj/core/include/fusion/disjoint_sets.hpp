#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace fusion {

// Union by size with path compression. Each root also carries a counter of
// marked elements (terminals), kept exact across unions.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), marked_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  void mark(std::size_t x) { ++marked_[find(x)]; }
  std::size_t marked(std::size_t x) { return marked_[find(x)]; }

  // Returns false if a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    marked_[a] += marked_[b];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> marked_;
};

}  // namespace fusion
