#include "domgame/enumerate.hpp"

#include <array>
#include <random>
#include <string>

#include "domgame/error.hpp"
#include "domgame/graph6.hpp"
#include "domgame/metrics.hpp"
#include "domgame/rng.hpp"

namespace domgame {

namespace {

void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw InputError("internal enumeration supports 1 <= n <= 7 (got " + std::to_string(n) +
                     "); use a graph6 stream for larger orders");
  }
}

}  // namespace

Graph graph_from_pattern(int n, std::uint64_t pattern) {
  std::array<VertexSet, kMaxVertices> adj{};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((pattern >> k) & 1U) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return Graph::from_adjacency(std::span<const VertexSet>(adj.data(), static_cast<std::size_t>(n)));
}

EnumerationStats enumerate_labeled_connected(int n, std::uint64_t first, std::uint64_t last,
                                             const std::function<void(std::uint64_t, const Graph&)>& visit) {
  check_enumeration_order(n);
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  if (last > total) last = total;
  EnumerationStats stats;
  for (std::uint64_t pattern = first; pattern < last; ++pattern) {
    ++stats.labeled;
    const Graph g = graph_from_pattern(n, pattern);
    if (!is_connected(g)) continue;
    ++stats.connected;
    visit(pattern, g);
  }
  return stats;
}

EnumerationStats enumerate_labeled_connected(int n, const std::function<void(const Graph&)>& visit) {
  check_enumeration_order(n);
  return enumerate_labeled_connected(n, 0, std::uint64_t{1} << (n * (n - 1) / 2),
                                     [&](std::uint64_t, const Graph& g) { visit(g); });
}

Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw InputError("random_graph order outside [1, 64]");
  if (p_den == 0 || p_num > p_den) throw InputError("invalid edge probability");
  std::mt19937_64 rng(seed);
  std::array<VertexSet, kMaxVertices> adj{};
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (uniform_below(rng, p_den) < p_num) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return Graph::from_adjacency(std::span<const VertexSet>(adj.data(), static_cast<std::size_t>(n)));
}

}  // namespace domgame
