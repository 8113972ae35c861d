#include "domgame/hamiltonian.hpp"

#include <string>

#include "domgame/error.hpp"
#include "domgame/metrics.hpp"

namespace domgame {

namespace {

class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g), all_(g.vertices()) {}

  bool run() { return extend(0, VertexSet::single(0)); }

 private:
  bool extend(int end, VertexSet visited) {
    if (visited == all_) return g_.adjacent(end, 0);
    const VertexSet unvisited = all_ - visited;
    const VertexSet ends = VertexSet::single(end) | VertexSet::single(0);
    for (int u : unvisited) {
      if ((g_.neighbors(u) & (unvisited | ends)).count() < 2) return false;
    }
    if (!reachable_from(end, unvisited)) return false;
    for (int next : g_.neighbors(end) & unvisited) {
      if (extend(next, visited | VertexSet::single(next))) return true;
    }
    return false;
  }

  bool reachable_from(int end, VertexSet unvisited) const {
    VertexSet reached;
    VertexSet frontier = g_.neighbors(end) & unvisited;
    while (!frontier.empty()) {
      reached |= frontier;
      VertexSet next;
      for (int v : frontier) next |= g_.neighbors(v);
      frontier = (next & unvisited) - reached;
    }
    return reached == unvisited;
  }

  const Graph& g_;
  VertexSet all_;
};

}  // namespace

bool is_hamiltonian(const Graph& g) {
  if (g.order() > kMaxHamiltonianOrder) {
    throw InputError("Hamiltonicity test supports n <= " + std::to_string(kMaxHamiltonianOrder));
  }
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return false;
  }
  if (!is_connected(g)) return false;
  return CycleSearch(g).run();
}

}  // namespace domgame
