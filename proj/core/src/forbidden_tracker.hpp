#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace fusion::detail {

// Tracks, for a family of disjoint groups, how many members of each forbidden
// set every group holds. A union of two groups is admissible iff no forbidden
// set is completed by it. Merging folds the smaller index into the larger.
class ForbiddenTracker {
 public:
  // group_of[v] in [0, groups); sets are lists of element indices.
  ForbiddenTracker(std::size_t groups, std::span<const std::uint32_t> group_of,
                   std::span<const std::vector<std::uint32_t>> sets)
      : counts_(groups) {
    sizes_.reserve(sets.size());
    for (std::uint32_t i = 0; i < sets.size(); ++i) {
      sizes_.push_back(static_cast<std::uint32_t>(sets[i].size()));
      for (std::uint32_t v : sets[i]) ++counts_[group_of[v]][i];
    }
  }

  bool contains_forbidden(std::size_t g) const {
    for (auto [set, count] : counts_[g]) {
      if (count == sizes_[set]) return true;
    }
    return false;
  }

  bool can_merge(std::size_t a, std::size_t b) const {
    const auto& small = counts_[a].size() <= counts_[b].size() ? counts_[a] : counts_[b];
    const auto& large = counts_[a].size() <= counts_[b].size() ? counts_[b] : counts_[a];
    for (auto [set, count] : small) {
      const auto it = large.find(set);
      if (it != large.end() && count + it->second == sizes_[set]) return false;
    }
    return true;
  }

  // Merges b into a.
  void merge(std::size_t a, std::size_t b) {
    if (counts_[a].size() < counts_[b].size()) std::swap(counts_[a], counts_[b]);
    for (auto [set, count] : counts_[b]) counts_[a][set] += count;
    counts_[b].clear();
  }

 private:
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> counts_;
  std::vector<std::uint32_t> sizes_;
};

}  // namespace fusion::detail
