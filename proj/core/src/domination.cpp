#include "domgame/domination.hpp"

#include <algorithm>
#include <string>

#include "domgame/error.hpp"

namespace domgame {

namespace {

class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::uint64_t budget) : g_(g), all_(g.vertices()), budget_(budget) {
    for (int v = 0; v < g.order(); ++v) max_closed_ = std::max(max_closed_, g.closed_neighbors(v).count());
  }

  bool feasible(VertexSet dominated, int picks_left) {
    if (dominated == all_) return true;
    if (picks_left == 0) return false;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("domination number search exceeded " + std::to_string(budget_) + " nodes");
    }
    const int missing = (all_ - dominated).count();
    if (missing > picks_left * max_closed_) return false;
    const int target = (all_ - dominated).lowest();
    for (int v : g_.closed_neighbors(target)) {
      if (feasible(dominated | g_.closed_neighbors(v), picks_left - 1)) return true;
    }
    return false;
  }

 private:
  const Graph& g_;
  VertexSet all_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int max_closed_ = 1;
};

}  // namespace

VertexSet greedy_dominating_set(const Graph& g) {
  VertexSet chosen;
  VertexSet dominated;
  while (dominated != g.vertices()) {
    int best = -1;
    int best_gain = 0;
    for (int v = 0; v < g.order(); ++v) {
      const int gain = (g.closed_neighbors(v) - dominated).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen.insert(best);
    dominated |= g.closed_neighbors(best);
  }
  return chosen;
}

int domination_number(const Graph& g, std::uint64_t node_budget) {
  const int upper = greedy_dominating_set(g).count();
  CoverSearch search(g, node_budget);
  int max_closed = 1;
  for (int v = 0; v < g.order(); ++v) max_closed = std::max(max_closed, g.closed_neighbors(v).count());
  for (int k = (g.order() + max_closed - 1) / max_closed; k < upper; ++k) {
    if (search.feasible(VertexSet{}, k)) return k;
  }
  return upper;
}

}  // namespace domgame
