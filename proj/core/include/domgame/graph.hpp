#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Stores the open neighbourhood N(v) and closed neighbourhood N[v] of every
/// vertex as bitsets. Construction validates symmetry and the absence of loops,
/// so every Graph value satisfies those invariants.
class Graph {
 public:
  /// K1.
  Graph();

  /// Throws InputError on n outside [1, 64], endpoints >= n, or loops.
  /// Duplicate and reversed pairs collapse to a single edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Throws InputError unless `adj` is symmetric, loop-free and masked to n.
  static Graph from_adjacency(std::span<const VertexSet> adj);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return closed_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  std::vector<Edge> edges() const;

  /// Graph H with H.adjacent(perm[u], perm[v]) iff adjacent(u, v).
  /// `perm` must be a permutation of {0, ..., n-1}.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void finish();

  int n_ = 1;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::array<VertexSet, kMaxVertices> closed_{};
};

}  // namespace domgame
