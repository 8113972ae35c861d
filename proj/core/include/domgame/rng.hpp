#pragma once

#include <cstdint>
#include <random>

namespace domgame {

/// Unbiased integer in [0, bound) from the raw std::mt19937_64 stream.
/// Unlike std::uniform_int_distribution, the result is identical on every
/// standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace domgame
