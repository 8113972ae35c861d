#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class Family {
  kCycle,              // C_n, n >= 3
  kPath,               // P_n, n >= 1
  kComplete,           // K_n, n >= 1
  kCompleteBipartite,  // K_{a,b}, a, b >= 1
  kPetersen,
  kMycielskiComplete,  // M(K_k), k >= 2
  kHGraph,             // H_k with an xy edge (t = 2) or an xyz triangle (t = 3), k >= 4
};

struct FamilySpec {
  Family family = Family::kPetersen;
  int a = 0;  ///< n, k, or the first part size
  int b = 0;  ///< second part size, or t for h_graph
};

/// Throws InputError when a parameter is below the family minimum.
Graph family_build(const FamilySpec& spec);

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();

/// Star K_{1,k} with leaves u_1..u_k (vertices 0..k-1, centre 2k), clique
/// v_1..v_k (vertices k..2k-1), and v_i u_j for all i != j.
Graph mycielski_complete(int k);

/// K_{k,k} on parts {0..k-1} and {k..2k-1}; u = 0 and v = k. Vertex 2k is
/// joined to all of K_{k,k}. Then x = 2k+1 and y = 2k+2 are joined to each
/// other and to u and v. With t = 3 a third vertex z = 2k+3 completes the
/// triangle xyz and is attached to u and v like x and y.
Graph h_graph(int k, int t = 2);

/// Parses "name", "name:a" or "name:a,b" (e.g. "cycle:5", "h_graph:4,3").
/// Fixture names from `named_fixtures()` are accepted too.
Graph family_from_string(std::string_view text);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Connected diameter-2 graphs attaining gamma_g = ceil(n/2): the seven small
/// sporadic graphs (C4, C5, three C5-plus-vertex graphs, K_{3,3}, the
/// triangular prism) and the Petersen graph.
std::vector<NamedGraph> named_fixtures();

/// One line per family with its parameter syntax.
std::vector<std::string> family_usage();

}  // namespace domgame
