#include "domgame/solver.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <string>

#include "domgame/error.hpp"
#include "domgame/metrics.hpp"

namespace domgame {

namespace {

constexpr std::uint8_t kUnknown = 0xFF;
constexpr int kDenseMemoMaxOrder = 20;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Open addressing keyed by the dominated set. A full dominated set is
// terminal and never stored, so all-ones is free to mark empty slots.
class FlatTable {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  FlatTable() { reset(); }

  void reset() {
    keys_.assign(1024, kEmpty);
    values_.assign(1024, 0);
    used_ = 0;
  }

  std::uint8_t find(std::uint64_t key) const {
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = mix(key) & mask;; i = (i + 1) & mask) {
      if (keys_[i] == key) return values_[i];
      if (keys_[i] == kEmpty) return kUnknown;
    }
  }

  void store(std::uint64_t key, std::uint8_t value) {
    if (2 * (used_ + 1) > keys_.size()) grow();
    if (place(key, value)) ++used_;
  }

 private:
  bool place(std::uint64_t key, std::uint8_t value) {
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = mix(key) & mask;; i = (i + 1) & mask) {
      if (keys_[i] == key) {
        values_[i] = value;
        return false;
      }
      if (keys_[i] == kEmpty) {
        keys_[i] = key;
        values_[i] = value;
        return true;
      }
    }
  }

  void grow() {
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmpty);
    std::vector<std::uint8_t> old_values(values_.size() * 2, 0);
    old_keys.swap(keys_);
    old_values.swap(values_);
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] != kEmpty) place(old_keys[i], old_values[i]);
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> values_;
  std::size_t used_ = 0;
};

}  // namespace

// Dense array for small orders, one hash table per player otherwise.
class Solver::Memo {
 public:
  explicit Memo(int n) : dense_(n <= kDenseMemoMaxOrder) { reset(n); }

  void reset(int n) {
    if (dense_) {
      table_.assign(std::size_t{2} << n, kUnknown);
    } else {
      flat_[0].reset();
      flat_[1].reset();
    }
  }

  std::uint8_t find(VertexSet s, Player p) const {
    if (dense_) return table_[(s.bits() << 1) | static_cast<std::uint64_t>(p)];
    return flat_[static_cast<int>(p)].find(s.bits());
  }

  void store(VertexSet s, Player p, int value) {
    const auto v = static_cast<std::uint8_t>(value);
    if (dense_) {
      table_[(s.bits() << 1) | static_cast<std::uint64_t>(p)] = v;
    } else {
      flat_[static_cast<int>(p)].store(s.bits(), v);
    }
  }

 private:
  bool dense_;
  std::vector<std::uint8_t> table_;
  std::array<FlatTable, 2> flat_;
};

VertexSet legal_moves(const Graph& g, VertexSet dominated) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (!g.closed_neighbors(v).is_subset_of(dominated)) out.insert(v);
  }
  return out;
}

VertexSet legal_moves(const GameState& state) { return legal_moves(state.graph, state.dominated); }

Solver::Solver(const Graph& g, SolverOptions options)
    : graph_(g), options_(options), memo_(std::make_unique<Memo>(g.order())) {
  if (options_.prune) diam2_ = is_diam2(g);
  for (int v = 0; v < g.order(); ++v) max_closed_ = std::max(max_closed_, g.closed_neighbors(v).count());
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

void Solver::clear() {
  memo_->reset(graph_.order());
  nodes_ = 0;
}

// Writes the distinct successor dominated sets of `dominated`, most newly
// dominated vertices first, and returns how many there are.
int Solver::collect_children(VertexSet dominated, std::uint64_t* out) const {
  int count = 0;
  for (int v = 0; v < graph_.order(); ++v) {
    const VertexSet fresh = graph_.closed_neighbors(v) - dominated;
    if (fresh.empty()) continue;
    const std::uint64_t child = (dominated | fresh).bits();
    if (std::find(out, out + count, child) != out + count) continue;
    out[count++] = child;
  }
  std::sort(out, out + count, [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    return ca != cb ? ca > cb : a < b;
  });
  return count;
}

int Solver::search(VertexSet dominated, Player to_move) {
  const VertexSet all = graph_.vertices();
  if (dominated == all) return 0;
  if (const auto cached = memo_->find(dominated, to_move); cached != kUnknown) return cached;
  if (++nodes_ > options_.node_budget) {
    throw BudgetExceeded("node budget of " + std::to_string(options_.node_budget) + " states exceeded");
  }

  std::array<std::uint64_t, kMaxVertices> children{};
  const int count = collect_children(dominated, children.data());
  const int undominated = (all - dominated).count();

  int best = 0;
  if (to_move == Player::kDominator) {
    best = INT_MAX;
    int floor_value = 1;
    if (options_.prune) {
      const int max_new = std::popcount(children[0]) - dominated.count();
      floor_value = (undominated + max_new - 1) / max_new;
    }
    for (int i = 0; i < count; ++i) {
      best = std::min(best, 1 + search(VertexSet(children[i]), Player::kStaller));
      if (best <= floor_value) break;
    }
  } else {
    const int ceiling = options_.prune && diam2_ ? (2 * undominated + 2) / 3 : INT_MAX;
    for (int i = 0; i < count; ++i) {
      best = std::max(best, 1 + search(VertexSet(children[i]), Player::kDominator));
      if (best >= ceiling) break;
    }
  }
  memo_->store(dominated, to_move, best);
  return best;
}

SolveResult Solver::solve(VertexSet dominated, Player to_move) {
  dominated &= graph_.vertices();
  const std::uint64_t start = nodes_;
  SolveResult result;
  const VertexSet moves = legal_moves(graph_, dominated);
  if (moves.empty()) return result;

  // The root is expanded in full so the optimal move set is complete.
  const bool minimize = to_move == Player::kDominator;
  result.value = minimize ? INT_MAX : 0;
  for (int v : moves) {
    const int value = 1 + search(dominated | graph_.closed_neighbors(v), other(to_move));
    if (value == result.value) {
      result.optimal_first_moves.insert(v);
    } else if (minimize ? value < result.value : value > result.value) {
      result.value = value;
      result.optimal_first_moves = VertexSet::single(v);
    }
  }
  memo_->store(dominated, to_move, result.value);
  result.nodes_visited = nodes_ - start;
  return result;
}

int Solver::value(VertexSet dominated, Player to_move) {
  return search(dominated & graph_.vertices(), to_move);
}

SolveResult solve(const GameState& state, SolverOptions options) {
  return Solver(state.graph, options).solve(state.dominated, state.to_move);
}

int gamma_g(const Graph& g, SolverOptions options) {
  return Solver(g, options).value(VertexSet{}, Player::kDominator);
}

int gamma_g_prime(const Graph& g, SolverOptions options) {
  return Solver(g, options).value(VertexSet{}, Player::kStaller);
}

int gamma_g_partial(const Graph& g, VertexSet dominated, Player to_move, SolverOptions options) {
  return Solver(g, options).value(dominated, to_move);
}

}  // namespace domgame
