#pragma once

#include <cstdint>
#include <functional>

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxEnumerationOrder = 7;

struct EnumerationStats {
  std::uint64_t labeled = 0;    ///< 2^(n(n-1)/2)
  std::uint64_t connected = 0;  ///< visitor invocations
};

/// Graph on n vertices whose edges are the set bits of `pattern`, bit k being
/// the k-th pair in graph6 order.
Graph graph_from_pattern(int n, std::uint64_t pattern);

/// Calls `visit` once per connected labeled graph on {0, ..., n-1}, in
/// ascending order of the upper-triangle bit pattern. Throws InputError for
/// n outside [1, 7]; larger orders should come from graph6 streams.
EnumerationStats enumerate_labeled_connected(int n, const std::function<void(const Graph&)>& visit);

/// Same as above but only over patterns in [first, last), for resumable scans.
EnumerationStats enumerate_labeled_connected(int n, std::uint64_t first, std::uint64_t last,
                                             const std::function<void(std::uint64_t, const Graph&)>& visit);

/// G(n, p) with p = p_num / p_den. Pairs are drawn in graph6 order, one
/// draw each from std::mt19937_64 seeded with `seed`; a pair is an edge when
/// an unbiased uniform integer in [0, p_den) is below p_num.
Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

}  // namespace domgame
