#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// Diameter, or nullopt when some pair of vertices is unreachable.
/// K1 has diameter 0.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Diameter exactly 2 (connected, not complete, all distances <= 2).
bool is_diam2(const Graph& g);

/// True iff every open neighbourhood N(v) is a dominating set. For n >= 2 this
/// is equivalent to diam(G) <= 2.
bool open_neighborhoods_dominate(const Graph& g);

/// Some pair u < v with N[u] = N[v], if any.
std::optional<std::pair<int, int>> find_twins(const Graph& g);

struct GraphMetrics {
  int n = 0;
  int m = 0;
  int delta = 0;  ///< minimum degree
  int Delta = 0;  ///< maximum degree
  std::optional<int> diam;  ///< nullopt: disconnected
  bool twin_free = true;
  std::vector<int> degree_sequence;  ///< non-increasing
};

GraphMetrics degree_stats(const Graph& g);

}  // namespace domgame
