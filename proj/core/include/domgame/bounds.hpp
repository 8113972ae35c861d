#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domgame/solver.hpp"

namespace domgame::bounds {

/// 2 delta - 1. Upper bound on gamma_g for diameter-2 graphs.
int two_delta(int delta);

/// Remaining-move bound on G|(V \ X) with |X| = x >= 1 undominated vertices of
/// a diameter-2 graph: floor((2x+1)/3) with Dominator to move,
/// floor((2x+2)/3) with Staller to move.
int partial(int undominated, Player to_move);

/// floor(2(n - Delta)/3) + 1.
int delta_corollary(int n, int Delta);

/// ceil(n/2).
int half(int n);
/// ceil(n/2) - floor(n/11).
int half_minus_eleventh(int n);

struct GammaDiam2 {
  int hellwig = 0;                ///< floor(n/4) + 1, always
  std::optional<int> meierling;   ///< floor(n/4) when n = 4p + r meets the (p, r) condition
};
GammaDiam2 gamma_diam2(int n);

/// 2 floor(sqrt(n ln n / 2) + sqrt(n / 2)) - 1, n >= 3.
int total_dom_chain(int n);
/// Distance of sqrt(n ln n / 2) + sqrt(n / 2) from the nearest integer; the
/// floor above is trusted only while this stays well away from zero.
double total_dom_chain_margin(int n);

/// Replay of the greedy-Dominator recurrence with integer floors:
/// u_1 = n - delta - 1, u_i' = u_i - 1,
/// u_{i+1} = floor(u_i' (n - 2i - delta - 1) / (n - 2i)),
/// finished with the partial-game bound:
/// bound = 2k + floor((2 u_k' + 1) / 3).
struct GreedyChain {
  int n = 0;
  int delta = 0;
  int rounds = 0;
  std::vector<int> u;        ///< u_1 .. u_k (fewer if the chain ends early)
  std::vector<int> u_prime;  ///< u_1' .. u_k'
  int bound = 0;
  bool ended_early = false;  ///< undominated count reached 0 before round k finished
};

/// Throws InputError when n < 2k + 2, delta < 1, delta >= n or k < 1.
/// When delta + 1 > n - 2i the game cannot still be running, so u_i' is
/// taken as 0.
GreedyChain greedy_chain_bound(int n, int delta, int rounds);

/// One step of the case analysis behind ceil(n/2) - floor(n/11).
struct ProofCase {
  enum class Method {
    kTwoDeltaBelowNineTwentySeconds,  // 2 delta - 1 < 9n/22 <= target
    kTwoDeltaAtMostTarget,            // 2 delta - 1 <= target (equality where asserted)
    kGreedyChain,                     // chain replay, `rounds` rounds
  };
  int delta = 0;
  int n = 0;
  Method method = Method::kTwoDeltaAtMostTarget;
  int rounds = 0;
  int value = 0;                 ///< the bound this case establishes
  int target = 0;                ///< ceil(n/2) - floor(n/11)
  bool asserted_equal = false;   ///< the argument claims value == target
  bool asserted_strict = false;  ///< the argument claims value < target
  /// Two-round chain evaluated without intermediate floors:
  /// 4 + floor((2P - Q) / 3Q), P = (n - delta - 2)(n - delta - 3), Q = n - 2.
  std::optional<int> unfloored_value;
  bool holds = false;
};

/// Every (delta, n) case of the argument for 22 <= n <= max_n and
/// delta <= 10, each replayed with the method used there.
std::vector<ProofCase> stronger_bound_cases(int max_n = 200);

/// The n = 11..14 greedy-chain steps behind ceil(n/2) being strict for n >= 11,
/// with delta = floor((n+5)/4).
struct HalfCase {
  int n = 0;
  int delta = 0;
  GreedyChain chain;
  int target = 0;  ///< ceil(n/2)
  bool holds = false;
};
std::vector<HalfCase> half_bound_small_cases();

/// The report of every bound applicable to a graph with the given parameters.
/// Values are present only for diameter-2 inputs (and, for the optional ones,
/// only when their extra conditions hold).
struct BoundReport {
  std::optional<int> two_delta;
  std::optional<int> delta_corollary;
  std::optional<int> half;
  std::optional<int> half_minus_eleventh;
  std::optional<int> gamma_diam2;
  std::optional<int> meierling;
  std::optional<int> total_dom;
};

BoundReport report(int n, int delta, int Delta, std::optional<int> diam);

}  // namespace domgame::bounds
