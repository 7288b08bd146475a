#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace fusion {

// xoshiro256** seeded through splitmix64. The standard library engines are
// portable but their distributions are not, so every draw used by the
// solvers and the generator goes through the members below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for a named consumer, e.g. Rng::stream(seed, "gh-split").
  static Rng stream(std::uint64_t seed, std::string_view name);

  std::uint64_t next();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in the open interval (0, 1).
  double uniform_open01();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_[4];
};

}  // namespace fusion
