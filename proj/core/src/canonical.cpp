#include "domgame/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "domgame/error.hpp"
#include "domgame/graph6.hpp"

namespace domgame {

namespace {

// Stable colour refinement. Colours are ranks of sorted signatures, so they
// depend only on the isomorphism type of (g, v).
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    const auto color = refine_colors(g);
    cell_of_position_.assign(color.begin(), color.end());
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    color_ = color;
  }

  std::string run() {
    place(0, VertexSet{});
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) perm[best_order_[p]] = p;
    return encode_graph6(g_.relabeled(perm));
  }

 private:
  // Column p of the relabeled upper triangle, row 0 in the most significant bit.
  std::uint64_t column(int p, int v) const {
    std::uint64_t col = 0;
    for (int i = 0; i < p; ++i) col = (col << 1) | (g_.adjacent(v, order_[i]) ? 1U : 0U);
    return col;
  }

  int compare_prefix(int p) const {
    for (int j = 1; j <= p; ++j) {
      if (cols_[j] != best_cols_[j]) return cols_[j] < best_cols_[j] ? -1 : 1;
    }
    return 0;
  }

  void place(int p, VertexSet used) {
    if (p == n_) {
      if (!has_best_ || compare_prefix(n_ - 1) < 0) {
        best_cols_ = cols_;
        best_order_ = order_;
        has_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used.contains(v) || color_[v] != cell_of_position_[p]) continue;
      order_[p] = v;
      cols_[p] = column(p, v);
      if (has_best_ && compare_prefix(p) > 0) continue;
      place(p + 1, used | VertexSet::single(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::array<int, kMaxVertices> order_{};
  std::array<std::uint64_t, kMaxVertices> cols_{};
  std::array<int, kMaxVertices> best_order_{};
  std::array<std::uint64_t, kMaxVertices> best_cols_{};
  bool has_best_ = false;
};

struct VertexSignature {
  int degree = 0;
  std::vector<int> neighbor_degrees;
  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

std::vector<VertexSignature> signatures(const Graph& g) {
  std::vector<VertexSignature> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    out[v].degree = g.degree(v);
    for (int u : g.neighbors(v)) out[v].neighbor_degrees.push_back(g.degree(u));
    std::sort(out[v].neighbor_degrees.begin(), out[v].neighbor_degrees.end());
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)) {
    // Visit vertices of `a` so that each one (after the first in its component)
    // has an already-mapped neighbour.
    VertexSet seen;
    for (int root = 0; root < a.order(); ++root) {
      if (seen.contains(root)) continue;
      std::vector<int> queue{root};
      seen.insert(root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        order_.push_back(queue[head]);
        for (int u : a.neighbors(queue[head]) - seen) {
          seen.insert(u);
          queue.push_back(u);
        }
      }
    }
    map_.fill(-1);
  }

  bool run() { return extend(0, VertexSet{}); }

 private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < b_.order(); ++w) {
      if (used.contains(w) || !(sig_a_[v] == sig_b_[w])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int x = order_[i];
        ok = a_.adjacent(v, x) == b_.adjacent(w, map_[x]);
      }
      if (!ok) continue;
      map_[v] = w;
      if (extend(depth + 1, used | VertexSet::single(w))) return true;
    }
    map_[v] = -1;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<VertexSignature> sig_a_;
  std::vector<VertexSignature> sig_b_;
  std::vector<int> order_;
  std::array<int, kMaxVertices> map_{};
};

}  // namespace

Fingerprint fingerprint(const Graph& g) {
  Fingerprint fp;
  fp.n = g.order();
  fp.m = g.size();
  for (int v = 0; v < g.order(); ++v) {
    fp.degrees.push_back(g.degree(v));
    std::vector<int> nb;
    for (int u : g.neighbors(v)) nb.push_back(g.degree(u));
    std::sort(nb.begin(), nb.end());
    fp.neighbor_degrees.push_back(std::move(nb));
  }
  std::sort(fp.degrees.begin(), fp.degrees.end());
  std::sort(fp.neighbor_degrees.begin(), fp.neighbor_degrees.end());
  return fp;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (fingerprint(a) != fingerprint(b)) return false;
  return IsomorphismSearch(a, b).run();
}

std::string canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw InputError("canonical_form supports n <= " + std::to_string(kMaxCanonicalOrder));
  }
  return CanonicalSearch(g).run();
}

bool IsoClassSet::insert(const Graph& g) {
  auto& bucket = buckets_[fingerprint(g)];
  for (const auto& entry : bucket) {
    if (are_isomorphic(entry.representative, g)) return false;
  }
  bucket.push_back({g, canonical_form(g)});
  ++count_;
  return true;
}

bool IsoClassSet::contains(const Graph& g) const {
  const auto it = buckets_.find(fingerprint(g));
  if (it == buckets_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const Entry& e) { return are_isomorphic(e.representative, g); });
}

std::vector<std::string> IsoClassSet::keys() const {
  std::vector<std::string> out;
  out.reserve(count_);
  for (const auto& [fp, bucket] : buckets_) {
    for (const auto& entry : bucket) out.push_back(entry.key);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace domgame
