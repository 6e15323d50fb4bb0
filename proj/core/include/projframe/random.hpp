#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace projframe {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seedable generator with a portable output sequence.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the C++
/// standard. Bounded integers use rejection sampling on raw engine output
/// rather than std::uniform_int_distribution, whose algorithm varies between
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Stream for one fuzz trial:
  /// splitmix64(splitmix64(splitmix64(seed) ^ dim) ^ trial).
  static std::uint64_t trial_seed(std::uint64_t seed, std::size_t dim, std::size_t trial);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform integer in [-bound, bound] \ {0}.
  std::int64_t nonzero(std::int64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace projframe
