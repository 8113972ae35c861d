#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/solver.hpp"

namespace domgame {

struct StallerPolicy {
  enum class Kind {
    kFirstLegal,            // lowest-index legal vertex
    kRandom,                // uniform over legal vertices, mt19937_64(seed)
    kMaximizeUndominated,   // fewest newly dominated vertices, lowest index on ties
    kOptimal,               // maximizes the exact remaining game value
  };
  Kind kind = Kind::kFirstLegal;
  std::uint64_t seed = 0;
};

/// Round i of a D-game: Dominator's move d_i, then (unless the game ended)
/// Staller's move s_i. `u` and `u_prime` count undominated vertices after
/// d_i and s_i respectively.
struct GreedyRound {
  int dominator_move = -1;
  int u = 0;
  std::optional<int> staller_move;
  std::optional<int> u_prime;
};

struct GreedyTrace {
  int n = 0;
  int delta = 0;
  std::vector<GreedyRound> rounds;
  int moves = 0;  ///< total vertices played
};

/// Plays a full D-game where Dominator always picks a vertex dominating the
/// most new vertices (lowest index on ties) and Staller follows `policy`.
GreedyTrace greedy_trace(const Graph& g, StallerPolicy policy, SolverOptions solver_options = {});

inline constexpr int kMaxUiVerifierOrder = 8;

struct UiVerdict {
  bool holds = true;
  std::string failed_check;     ///< empty when holds
  std::vector<int> play;        ///< move sequence reaching the violation
  std::uint64_t plays_explored = 0;  ///< completed games examined
};

/// Explores every greedy-maximal Dominator choice and every Staller reply and
/// checks, in integer arithmetic, u_1 <= n - delta - 1, u_i' <= u_i - 1,
/// delta + 1 <= n - 2i while u_i' > 0, and
/// u_{i+1} (n - 2i) <= u_i' (n - 2i - delta - 1).
/// Throws InputError for disconnected graphs or n > 8.
UiVerdict verify_ui_bounds(const Graph& g);

}  // namespace domgame
