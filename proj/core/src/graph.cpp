#include "domgame/graph.hpp"

#include <algorithm>
#include <string>

#include "domgame/error.hpp"

namespace domgame {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " outside [1, 64]");
  }
}

}  // namespace

Graph::Graph() { finish(); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside the vertex range");
    }
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  g.finish();
  return g;
}

Graph Graph::from_adjacency(std::span<const VertexSet> adj) {
  const int n = static_cast<int>(adj.size());
  check_order(n);
  Graph g;
  g.n_ = n;
  const VertexSet all = VertexSet::full(n);
  for (int v = 0; v < n; ++v) {
    if (!adj[v].is_subset_of(all)) throw InputError("adjacency bits beyond graph order");
    if (adj[v].contains(v)) throw InputError("loop at vertex " + std::to_string(v));
    for (int u : adj[v]) {
      if (!adj[u].contains(v)) throw InputError("asymmetric adjacency");
    }
    g.adj_[v] = adj[v];
  }
  g.finish();
  return g;
}

void Graph::finish() {
  int deg_sum = 0;
  for (int v = 0; v < kMaxVertices; ++v) {
    if (v < n_) {
      closed_[v] = adj_[v] | VertexSet::single(v);
      deg_sum += adj_[v].count();
    } else {
      adj_[v] = VertexSet{};
      closed_[v] = VertexSet{};
    }
  }
  m_ = deg_sum / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InputError("permutation size mismatch");
  VertexSet seen;
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen.contains(p)) throw InputError("not a permutation");
    seen.insert(p);
  }
  Graph h;
  h.n_ = n_;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) h.adj_[perm[u]].insert(perm[v]);
  }
  h.finish();
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

}  // namespace domgame
