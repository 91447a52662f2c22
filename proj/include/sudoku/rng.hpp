#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sudoku {

// Deterministic random source used by every solver. All draws are derived
// from raw mt19937_64 output with hand-rolled mappings, so a given seed
// yields the same stream on every platform and standard library (the std::
// distributions make no such guarantee).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], both inclusive. Unbiased via rejection.
  int uniform_int(int lo, int hi) {
    assert(lo <= hi);
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(bounded(span));
  }

  // Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    assert(n > 0);
    return static_cast<std::size_t>(bounded(n));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[index(i)]);
    }
  }

 private:
  // Uniform value in [0, span); span > 0.
  std::uint64_t bounded(std::uint64_t span) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % span;
  }

  std::mt19937_64 engine_;
};

}  // namespace sudoku
