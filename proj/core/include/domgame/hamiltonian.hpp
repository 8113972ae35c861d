#pragma once

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxHamiltonianOrder = 16;

/// Whether `g` has a Hamiltonian cycle. False for n <= 2.
///
/// Backtracking path extension from vertex 0 with two prunes: every unvisited
/// vertex needs two possible cycle neighbours among the unvisited vertices and
/// the path ends, and the unvisited vertices must stay reachable from the
/// current end. Throws InputError for n > 16.
bool is_hamiltonian(const Graph& g);

}  // namespace domgame
