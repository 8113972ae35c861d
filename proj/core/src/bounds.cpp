#include "domgame/bounds.hpp"

#include <cmath>
#include <string>

#include "domgame/error.hpp"

namespace domgame::bounds {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

long double total_dom_sum(int n) {
  const long double x = n;
  return std::sqrt(x * std::log(x) / 2.0L) + std::sqrt(x / 2.0L);
}

}  // namespace

int two_delta(int delta) {
  require(delta >= 1, "two_delta needs delta >= 1");
  return 2 * delta - 1;
}

int partial(int undominated, Player to_move) {
  require(undominated >= 1, "partial bound needs at least one undominated vertex");
  return to_move == Player::kDominator ? (2 * undominated + 1) / 3 : (2 * undominated + 2) / 3;
}

int delta_corollary(int n, int Delta) {
  require(Delta >= 0 && Delta <= n - 1, "delta_corollary needs 0 <= Delta <= n - 1");
  return 2 * (n - Delta) / 3 + 1;
}

int half(int n) {
  require(n >= 1, "half needs n >= 1");
  return (n + 1) / 2;
}

int half_minus_eleventh(int n) {
  require(n >= 1, "half_minus_eleventh needs n >= 1");
  return (n + 1) / 2 - n / 11;
}

GammaDiam2 gamma_diam2(int n) {
  require(n >= 1, "gamma_diam2 needs n >= 1");
  GammaDiam2 out;
  out.hellwig = n / 4 + 1;
  const int p = n / 4;
  const int r = n % 4;
  if ((r == 0 && p >= 4) || (r == 1 && p >= 5) || ((r == 2 || r == 3) && p >= 6)) out.meierling = p;
  return out;
}

int total_dom_chain(int n) {
  require(n >= 3, "total_dom_chain needs n >= 3");
  return 2 * static_cast<int>(std::floor(total_dom_sum(n))) - 1;
}

double total_dom_chain_margin(int n) {
  require(n >= 3, "total_dom_chain needs n >= 3");
  const long double s = total_dom_sum(n);
  return static_cast<double>(std::fabs(s - std::round(s)));
}

GreedyChain greedy_chain_bound(int n, int delta, int rounds) {
  require(rounds >= 1, "greedy chain needs at least one round");
  require(delta >= 1 && delta < n, "greedy chain needs 1 <= delta < n");
  require(n >= 2 * rounds + 2, "greedy chain needs n >= 2k + 2");

  GreedyChain chain;
  chain.n = n;
  chain.delta = delta;
  chain.rounds = rounds;
  int u = n - delta - 1;
  for (int i = 1; i <= rounds; ++i) {
    chain.u.push_back(u);
    if (u == 0) {
      chain.bound = 2 * i - 1;
      chain.ended_early = true;
      return chain;
    }
    int u_prime = u - 1;
    const int free = n - 2 * i;
    if (delta + 1 > free) u_prime = 0;
    chain.u_prime.push_back(u_prime);
    if (u_prime == 0) {
      chain.bound = 2 * i;
      chain.ended_early = i < rounds;
      return chain;
    }
    if (i < rounds) u = u_prime * (free - delta - 1) / free;
  }
  chain.bound = 2 * rounds + (2 * chain.u_prime.back() + 1) / 3;
  return chain;
}

std::vector<ProofCase> stronger_bound_cases(int max_n) {
  using Method = ProofCase::Method;
  std::vector<ProofCase> out;

  auto two_delta_case = [&](int delta, int n, bool strict_ratio, bool equal) {
    ProofCase c;
    c.delta = delta;
    c.n = n;
    c.value = 2 * delta - 1;
    c.target = half_minus_eleventh(n);
    c.asserted_equal = equal;
    if (strict_ratio) {
      c.method = Method::kTwoDeltaBelowNineTwentySeconds;
      c.asserted_strict = true;
      // 2 delta - 1 < 9n/22 and 9n/22 <= target, compared in integers.
      c.holds = 22 * c.value < 9 * n && 9 * n <= 22 * c.target && c.value < c.target;
    } else {
      c.method = Method::kTwoDeltaAtMostTarget;
      c.holds = equal ? c.value == c.target : c.value <= c.target;
    }
    out.push_back(c);
  };

  auto chain_case = [&](int delta, int n, int rounds, bool strict) {
    ProofCase c;
    c.delta = delta;
    c.n = n;
    c.method = Method::kGreedyChain;
    c.rounds = rounds;
    c.value = greedy_chain_bound(n, delta, rounds).bound;
    c.target = half_minus_eleventh(n);
    c.asserted_strict = strict;
    c.holds = strict ? c.value < c.target : c.value <= c.target;
    if (rounds == 2) {
      const long long p = static_cast<long long>(n - delta - 2) * (n - delta - 3);
      const long long q = n - 2;
      const long long numerator = 2 * p - q;
      // numerator >= 0 in every case replayed here.
      c.unfloored_value = 4 + static_cast<int>(numerator / (3 * q));
      c.holds = c.holds && *c.unfloored_value <= c.target;
    }
    out.push_back(c);
  };

  // delta <= 5: 2 delta - 1 <= 9 <= 9n/22 for n >= 22.
  for (int delta = 1; delta <= 5; ++delta) {
    for (int n = 22; n <= max_n; ++n) {
      ProofCase c;
      c.delta = delta;
      c.n = n;
      c.method = Method::kTwoDeltaAtMostTarget;
      c.value = 2 * delta - 1;
      c.target = half_minus_eleventh(n);
      c.holds = c.value <= 9 && 9 * 22 <= 9 * n && 9 * n <= 22 * c.target;
      out.push_back(c);
    }
  }

  struct Plan {
    int delta;
    int ratio_from;      // 2 delta - 1 < 9n/22 for n >= ratio_from
    int at_most_from;    // 2 delta - 1 <= target for at_most_from <= n < ratio_from
    bool at_most_equal;  // ... with equality asserted
    int chain_to;        // two-round chain for 22 <= n <= chain_to
    int three_round_n;   // single order needing a third round, or 0
  };
  constexpr Plan plans[] = {
      {6, 27, 25, true, 24, 0},
      {7, 32, 29, false, 28, 0},
      {8, 37, 35, true, 33, 34},
      {9, 42, 39, false, 38, 0},
      {10, 47, 45, true, 43, 44},
  };
  for (const Plan& plan : plans) {
    for (int n = 22; n <= max_n; ++n) {
      if (n >= plan.ratio_from) {
        two_delta_case(plan.delta, n, true, false);
      } else if (n >= plan.at_most_from) {
        two_delta_case(plan.delta, n, false, plan.at_most_equal);
      } else if (n <= plan.chain_to) {
        chain_case(plan.delta, n, 2, false);
      } else if (n == plan.three_round_n) {
        chain_case(plan.delta, n, 3, true);
      }
    }
  }
  return out;
}

std::vector<HalfCase> half_bound_small_cases() {
  std::vector<HalfCase> out;
  for (int n = 11; n <= 14; ++n) {
    HalfCase c;
    c.n = n;
    c.delta = (n + 5) / 4;
    c.chain = greedy_chain_bound(n, c.delta, n == 14 ? 3 : 2);
    c.target = half(n);
    c.holds = c.chain.bound < c.target;
    out.push_back(c);
  }
  return out;
}

BoundReport report(int n, int delta, int Delta, std::optional<int> diam) {
  BoundReport r;
  if (!diam || *diam != 2) return r;
  r.two_delta = two_delta(delta);
  r.delta_corollary = delta_corollary(n, Delta);
  r.half = half(n);
  r.half_minus_eleventh = half_minus_eleventh(n);
  const auto g = gamma_diam2(n);
  r.gamma_diam2 = g.hellwig;
  r.meierling = g.meierling;
  if (n >= 3) r.total_dom = total_dom_chain(n);
  return r;
}

}  // namespace domgame::bounds
