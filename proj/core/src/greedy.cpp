#include "domgame/greedy.hpp"

#include <algorithm>
#include <random>

#include "domgame/error.hpp"
#include "domgame/metrics.hpp"
#include "domgame/rng.hpp"

namespace domgame {

namespace {

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int gain(const Graph& g, VertexSet dominated, int v) { return (g.closed_neighbors(v) - dominated).count(); }

// Vertices maximising the number of newly dominated vertices.
VertexSet greedy_choices(const Graph& g, VertexSet dominated) {
  int best = 0;
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    const int c = gain(g, dominated, v);
    if (c > best) {
      best = c;
      out = VertexSet::single(v);
    } else if (c == best && c > 0) {
      out.insert(v);
    }
  }
  return out;
}

class UiExplorer {
 public:
  explicit UiExplorer(const Graph& g) : g_(g), n_(g.order()), delta_(min_degree(g)) {}

  UiVerdict run() {
    dominator(VertexSet{}, 0, 0);
    return verdict_;
  }

 private:
  // Dominator plays round `round + 1`; `u_prime` is u'_round (unused when round == 0).
  bool dominator(VertexSet dominated, int round, int u_prime) {
    for (int d : greedy_choices(g_, dominated)) {
      play_.push_back(d);
      const VertexSet after = dominated | g_.closed_neighbors(d);
      const int u = (g_.vertices() - after).count();
      if (round == 0) {
        if (u > n_ - delta_ - 1) return fail("u_1 <= n - delta - 1");
      } else {
        const int free = n_ - 2 * round;
        if (delta_ + 1 > free) return fail("delta + 1 <= n - 2i while undominated vertices remain");
        if (static_cast<long long>(u) * free > static_cast<long long>(u_prime) * (free - delta_ - 1)) {
          return fail("u_{i+1} (n - 2i) <= u_i' (n - 2i - delta - 1)");
        }
      }
      if (u == 0) {
        ++verdict_.plays_explored;
      } else if (!staller(after, round + 1, u)) {
        return false;
      }
      play_.pop_back();
    }
    return true;
  }

  bool staller(VertexSet dominated, int round, int u) {
    for (int s : legal_moves(g_, dominated)) {
      play_.push_back(s);
      const VertexSet after = dominated | g_.closed_neighbors(s);
      const int u_prime = (g_.vertices() - after).count();
      if (u_prime > u - 1) return fail("u_i' <= u_i - 1");
      if (u_prime == 0) {
        ++verdict_.plays_explored;
      } else if (!dominator(after, round, u_prime)) {
        return false;
      }
      play_.pop_back();
    }
    return true;
  }

  bool fail(const char* check) {
    verdict_.holds = false;
    verdict_.failed_check = check;
    verdict_.play = play_;
    return false;
  }

  const Graph& g_;
  int n_;
  int delta_;
  std::vector<int> play_;
  UiVerdict verdict_;
};

}  // namespace

GreedyTrace greedy_trace(const Graph& g, StallerPolicy policy, SolverOptions solver_options) {
  GreedyTrace trace;
  trace.n = g.order();
  trace.delta = min_degree(g);
  std::mt19937_64 rng(policy.seed);
  std::optional<Solver> solver;
  if (policy.kind == StallerPolicy::Kind::kOptimal) solver.emplace(g, solver_options);

  VertexSet dominated;
  while (dominated != g.vertices()) {
    GreedyRound round;
    round.dominator_move = greedy_choices(g, dominated).lowest();
    dominated |= g.closed_neighbors(round.dominator_move);
    round.u = (g.vertices() - dominated).count();
    ++trace.moves;
    if (round.u > 0) {
      const VertexSet legal = legal_moves(g, dominated);
      int pick = legal.lowest();
      switch (policy.kind) {
        case StallerPolicy::Kind::kFirstLegal:
          break;
        case StallerPolicy::Kind::kRandom: {
          std::vector<int> options(legal.begin(), legal.end());
          pick = options[uniform_below(rng, options.size())];
          break;
        }
        case StallerPolicy::Kind::kMaximizeUndominated:
          for (int v : legal) {
            if (gain(g, dominated, v) < gain(g, dominated, pick)) pick = v;
          }
          break;
        case StallerPolicy::Kind::kOptimal: {
          int best = -1;
          for (int v : legal) {
            const int value = solver->value(dominated | g.closed_neighbors(v), Player::kDominator);
            if (value > best) {
              best = value;
              pick = v;
            }
          }
          break;
        }
      }
      dominated |= g.closed_neighbors(pick);
      round.staller_move = pick;
      round.u_prime = (g.vertices() - dominated).count();
      ++trace.moves;
    }
    trace.rounds.push_back(round);
  }
  return trace;
}

UiVerdict verify_ui_bounds(const Graph& g) {
  if (g.order() > kMaxUiVerifierOrder) throw InputError("verify_ui_bounds supports n <= 8");
  if (!is_connected(g)) throw InputError("verify_ui_bounds needs a connected graph");
  return UiExplorer(g).run();
}

}  // namespace domgame
