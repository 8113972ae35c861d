#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class Player : std::uint8_t { kDominator = 0, kStaller = 1 };

constexpr Player other(Player p) {
  return p == Player::kDominator ? Player::kStaller : Player::kDominator;
}

/// A position of the domination game. Vertices already played are never legal
/// again (their closed neighbourhood is dominated), so the dominated set and
/// the player to move fully determine the value.
struct GameState {
  const Graph& graph;
  VertexSet dominated;
  Player to_move = Player::kDominator;

  bool over() const { return dominated == graph.vertices(); }
};

/// Vertices that would dominate at least one new vertex.
VertexSet legal_moves(const GameState& state);
VertexSet legal_moves(const Graph& g, VertexSet dominated);

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolverOptions {
  /// Maximum number of expanded (non-memoised) states per Solver lifetime.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Stop scanning a state's moves once a provable bound is met: for
  /// Dominator the lower bound ceil(x / (Delta + 1)); for Staller on
  /// diameter-2 graphs the upper bound floor((2x + 2) / 3). Values are
  /// unaffected.
  bool prune = false;
};

struct SolveResult {
  int value = 0;
  std::uint64_t nodes_visited = 0;
  /// Every legal first move achieving `value`; empty iff the state is over.
  VertexSet optimal_first_moves;
};

/// Exact minimax solver for one fixed graph. The memo persists across calls,
/// so many root states of the same graph can be solved cheaply. Not
/// thread-safe; use one instance per thread.
class Solver {
 public:
  explicit Solver(const Graph& g, SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// Throws BudgetExceeded when the node budget runs out.
  SolveResult solve(VertexSet dominated, Player to_move);
  int value(VertexSet dominated, Player to_move);

  std::uint64_t nodes_visited() const { return nodes_; }
  const Graph& graph() const { return graph_; }
  void clear();

 private:
  class Memo;

  int search(VertexSet dominated, Player to_move);
  int collect_children(VertexSet dominated, std::uint64_t* out) const;

  Graph graph_;
  SolverOptions options_;
  bool diam2_ = false;
  int max_closed_ = 1;
  std::uint64_t nodes_ = 0;
  std::unique_ptr<Memo> memo_;
};

SolveResult solve(const GameState& state, SolverOptions options = {});

/// gamma_g(G): D-game from the empty dominated set.
int gamma_g(const Graph& g, SolverOptions options = {});
/// gamma_g'(G): S-game from the empty dominated set.
int gamma_g_prime(const Graph& g, SolverOptions options = {});
/// Value of the game on G|S with `to_move` next.
int gamma_g_partial(const Graph& g, VertexSet dominated, Player to_move, SolverOptions options = {});

}  // namespace domgame
