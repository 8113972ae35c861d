#pragma once

#include <cstdint>

#include "domgame/graph.hpp"

namespace domgame {

/// gamma(G): size of a smallest dominating set.
///
/// Iterative deepening from ceil(n / (Delta + 1)) up to a greedy upper bound;
/// each depth branches on the closed neighbourhood of the lowest undominated
/// vertex. Throws BudgetExceeded after `node_budget` search nodes.
int domination_number(const Graph& g, std::uint64_t node_budget = 50'000'000);

/// A dominating set built by repeatedly taking the vertex that dominates the
/// most new vertices (lowest index on ties).
VertexSet greedy_dominating_set(const Graph& g);

}  // namespace domgame
