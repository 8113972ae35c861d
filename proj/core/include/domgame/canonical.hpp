#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxCanonicalOrder = 10;

/// Isomorphism invariant: n, m, sorted degree sequence, and the sorted
/// multiset of sorted neighbour-degree lists. Equal graphs up to isomorphism
/// have equal fingerprints; the converse does not hold.
struct Fingerprint {
  int n = 0;
  int m = 0;
  std::vector<int> degrees;
  std::vector<std::vector<int>> neighbor_degrees;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Graph& g);

/// Exact isomorphism test by backtracking over degree-compatible mappings.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Canonical key: the lexicographically smallest graph6 string over all
/// relabelings that order vertices by their colour-refinement class.
/// Equal iff the graphs are isomorphic. Throws InputError for n > 10.
std::string canonical_form(const Graph& g);

/// Set of isomorphism classes. Candidates are bucketed by fingerprint and
/// compared with `are_isomorphic` inside a bucket; each class is stored under
/// the canonical form of its first representative.
class IsoClassSet {
 public:
  /// Returns true when `g` starts a new class.
  bool insert(const Graph& g);

  std::size_t size() const { return count_; }
  /// Canonical keys of all classes, sorted.
  std::vector<std::string> keys() const;
  bool contains(const Graph& g) const;

 private:
  struct Entry {
    Graph representative;
    std::string key;
  };
  std::map<Fingerprint, std::vector<Entry>> buckets_;
  std::size_t count_ = 0;
};

}  // namespace domgame
