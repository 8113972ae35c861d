#include "domgame/metrics.hpp"

#include <algorithm>
#include <functional>

namespace domgame {

namespace {

// Eccentricity of `source` by frontier expansion, or -1 if some vertex is unreachable.
int eccentricity(const Graph& g, int source) {
  const VertexSet all = g.vertices();
  VertexSet reached = VertexSet::single(source);
  VertexSet frontier = reached;
  int depth = 0;
  while (reached != all) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next -= reached;
    if (next.empty()) return -1;
    reached |= next;
    frontier = next;
    ++depth;
  }
  return depth;
}

}  // namespace

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int e = eccentricity(g, v);
    if (e < 0) return std::nullopt;
    best = std::max(best, e);
  }
  return best;
}

bool is_connected(const Graph& g) { return eccentricity(g, 0) >= 0; }

bool is_diam2(const Graph& g) {
  const auto d = diameter(g);
  return d && *d == 2;
}

bool open_neighborhoods_dominate(const Graph& g) {
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet covered;
    for (int u : g.neighbors(v)) covered |= g.closed_neighbors(u);
    if (covered != all) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> find_twins(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.closed_neighbors(u) == g.closed_neighbors(v)) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

GraphMetrics degree_stats(const Graph& g) {
  GraphMetrics out;
  out.n = g.order();
  out.m = g.size();
  out.degree_sequence.reserve(static_cast<std::size_t>(out.n));
  for (int v = 0; v < out.n; ++v) out.degree_sequence.push_back(g.degree(v));
  std::sort(out.degree_sequence.begin(), out.degree_sequence.end(), std::greater<>());
  out.Delta = out.degree_sequence.front();
  out.delta = out.degree_sequence.back();
  out.diam = diameter(g);
  out.twin_free = !find_twins(g).has_value();
  return out;
}

}  // namespace domgame
