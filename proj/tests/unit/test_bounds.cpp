#include <doctest.h>

#include <cmath>

#include "domgame/bounds.hpp"
#include "domgame/error.hpp"

using namespace domgame;
namespace b = domgame::bounds;

TEST_SUITE("bounds") {

TEST_CASE("two_delta") {
  CHECK(b::two_delta(1) == 1);
  CHECK(b::two_delta(6) == 11);
  CHECK(b::two_delta(10) == 19);
  CHECK_THROWS_AS(b::two_delta(0), InputError);
}

TEST_CASE("partial bound matches the rational formula") {
  CHECK(b::partial(1, Player::kDominator) == 1);
  CHECK(b::partial(4, Player::kDominator) == 3);
  CHECK(b::partial(10, Player::kStaller) == 7);
  for (int x = 1; x <= 500; ++x) {
    CHECK(b::partial(x, Player::kDominator) == static_cast<int>(std::floor((2.0 * x + 1.0) / 3.0)));
    CHECK(b::partial(x, Player::kStaller) == static_cast<int>(std::floor((2.0 * x + 2.0) / 3.0)));
  }
  CHECK_THROWS_AS(b::partial(0, Player::kDominator), InputError);
}

TEST_CASE("delta corollary") {
  for (int n = 2; n <= 30; ++n) {
    CHECK(b::delta_corollary(n, n - 1) == 1);
    CHECK(b::delta_corollary(n, n - 2) == 2);
  }
  CHECK(b::delta_corollary(10, 3) == 5);
  CHECK_THROWS_AS(b::delta_corollary(5, 5), InputError);
  CHECK_THROWS_AS(b::delta_corollary(5, -1), InputError);
}

TEST_CASE("half and half minus eleventh") {
  CHECK(b::half(11) == 6);
  CHECK(b::half_minus_eleventh(11) == 5);
  CHECK(b::half(10) == 5);
  CHECK(b::half_minus_eleventh(10) == 5);
  CHECK(b::half_minus_eleventh(44) == 18);
  for (int n = 1; n <= 10; ++n) CHECK(b::half(n) == b::half_minus_eleventh(n));
  CHECK_THROWS_AS(b::half(0), InputError);
}

TEST_CASE("domination number bounds") {
  const auto n16 = b::gamma_diam2(16);
  CHECK(n16.hellwig == 5);
  CHECK(n16.meierling == 4);
  const auto n12 = b::gamma_diam2(12);
  CHECK(n12.hellwig == 4);
  CHECK_FALSE(n12.meierling.has_value());
  const auto n10 = b::gamma_diam2(10);
  CHECK(n10.hellwig == 3);
  CHECK_FALSE(n10.meierling.has_value());
  CHECK(b::gamma_diam2(21).meierling == 5);
  CHECK_FALSE(b::gamma_diam2(17).meierling.has_value());
  CHECK_FALSE(b::gamma_diam2(23).meierling.has_value());
  CHECK(b::gamma_diam2(26).meierling == 6);
}

TEST_CASE("total domination chain") {
  const int v3 = b::total_dom_chain(3);
  CHECK(v3 > 0);
  CHECK(v3 % 2 == 1);
  CHECK_THROWS_AS(b::total_dom_chain(2), InputError);
  // Every floor taken far from an integer boundary.
  for (int n = 3; n <= 10000; ++n) CHECK(b::total_dom_chain_margin(n) > 1e-9);
  int last = 0;
  for (int n = 3; n <= 2000; ++n) {
    CHECK(b::total_dom_chain(n) >= last);
    last = b::total_dom_chain(n);
  }
}

TEST_CASE("greedy chain examples") {
  CHECK(b::greedy_chain_bound(22, 6, 2).bound == 9);
  CHECK(b::greedy_chain_bound(23, 6, 2).bound == 10);
  CHECK(b::greedy_chain_bound(24, 6, 2).bound == 10);
  const auto c34 = b::greedy_chain_bound(34, 8, 3);
  CHECK(c34.bound == 13);
  CHECK(c34.u == std::vector<int>{25, 17, 11});
  CHECK(c34.u_prime == std::vector<int>{24, 16, 10});
  CHECK(b::greedy_chain_bound(44, 10, 3).bound == 15);
}

TEST_CASE("greedy chain invariants") {
  for (int n = 6; n <= 60; ++n) {
    for (int delta = 1; delta < n; ++delta) {
      for (int k = 1; 2 * k + 2 <= n && k <= 4; ++k) {
        const auto c = b::greedy_chain_bound(n, delta, k);
        REQUIRE(!c.u.empty());
        CHECK(c.u[0] == n - delta - 1);
        for (std::size_t i = 0; i < c.u_prime.size(); ++i) {
          CHECK(c.u_prime[i] >= 0);
          CHECK(c.u_prime[i] <= c.u[i] - 1);
          if (i + 1 < c.u.size()) {
            const int free = n - 2 * static_cast<int>(i + 1);
            CHECK(c.u[i + 1] == c.u_prime[i] * (free - delta - 1) / free);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(b::greedy_chain_bound(10, 0, 2), InputError);
  CHECK_THROWS_AS(b::greedy_chain_bound(5, 2, 2), InputError);
  CHECK_THROWS_AS(b::greedy_chain_bound(10, 3, 0), InputError);
}

TEST_CASE("chain ending early reports the moves so far") {
  const auto c = b::greedy_chain_bound(10, 9, 3);
  CHECK(c.u == std::vector<int>{0});
  CHECK(c.bound == 1);
  CHECK(c.ended_early);
  const auto d = b::greedy_chain_bound(10, 8, 3);
  CHECK(d.u == std::vector<int>{1});
  CHECK(d.u_prime == std::vector<int>{0});
  CHECK(d.bound == 2);
}

TEST_CASE("half bound small-order chains") {
  const auto cases = b::half_bound_small_cases();
  REQUIRE(cases.size() == 4);
  CHECK(cases[0].n == 11);
  CHECK(cases[0].chain.u.at(1) <= 2);
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CHECK(c.delta == (c.n + 5) / 4);
    CHECK(c.holds);
  }
  CHECK(b::greedy_chain_bound(12, 4, 2).bound < b::half(12));
  CHECK(b::greedy_chain_bound(13, 4, 2).bound < b::half(13));
}

TEST_CASE("stronger bound case table") {
  const auto cases = b::stronger_bound_cases(200);
  int chains = 0;
  int equalities = 0;
  for (const auto& c : cases) {
    CAPTURE(c.delta);
    CAPTURE(c.n);
    CHECK(c.holds);
    CHECK(c.target == b::half_minus_eleventh(c.n));
    if (c.method == b::ProofCase::Method::kGreedyChain) ++chains;
    if (c.asserted_equal) {
      ++equalities;
      CHECK(c.value == c.target);
    }
  }
  // Two-round chains for n from 22 up to each plan's limit, plus the two three-round orders.
  CHECK(chains == 3 + 7 + 13 + 17 + 23);
  CHECK(equalities == 6);
}

TEST_CASE("bound report applicability") {
  const auto r = b::report(10, 3, 3, 2);
  CHECK(r.two_delta == 5);
  CHECK(r.delta_corollary == 5);
  CHECK(r.half == 5);
  CHECK(r.half_minus_eleventh == 5);
  CHECK(r.gamma_diam2 == 3);
  CHECK_FALSE(r.meierling.has_value());
  CHECK(r.total_dom.has_value());
  const auto none = b::report(4, 1, 3, 3);
  CHECK_FALSE(none.two_delta.has_value());
  CHECK_FALSE(none.half.has_value());
  CHECK_FALSE(b::report(4, 1, 1, std::nullopt).half.has_value());
}

}  // TEST_SUITE
