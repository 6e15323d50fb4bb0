#include "projframe/random.hpp"

#include "projframe/error.hpp"

namespace projframe {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::trial_seed(std::uint64_t seed, std::size_t dim, std::size_t trial) {
  return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(dim)) ^ static_cast<std::uint64_t>(trial));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty integer range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  // Accept draws at or above 2^64 mod range so every residue is equally likely.
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t x = next();
  while (x < threshold) x = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

std::int64_t Rng::nonzero(std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  const std::int64_t k = uniform(0, 2 * bound - 1);  // 0..2b-1 -> -b..-1, 1..b
  return k < bound ? k - bound : k - bound + 1;
}

}  // namespace projframe
