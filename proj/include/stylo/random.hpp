#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace stylo {

// All randomness in the toolkit flows from explicit 64-bit seeds. Work units
// (a forest tree, a permutation repeat, a sweep point) get their own seed via
//   derive_seed(master, stream, index)
//     = splitmix64(splitmix64(master ^ (stream * 0x9E3779B97F4A7C15)) + index)
// so results do not depend on execution order or thread count. Sampling
// helpers are implemented here rather than through <random> distributions,
// whose output is implementation-defined.

enum class Stream : std::uint64_t {
  Split = 1,
  Fold = 2,
  ForestTree = 3,
  Boost = 4,
  Permutation = 5,
  Noise = 6,
  Sweep = 7,
  Importance = 8,
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n), unbiased. n must be > 0.
  std::size_t uniform_index(std::size_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal draw (Marsaglia polar method).
  double normal();

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = uniform_index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace stylo
