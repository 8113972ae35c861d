#include "domgame/graph6.hpp"

#include <array>

#include "domgame/error.hpp"

namespace domgame {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) {
    throw InputError("graph6 byte " + std::to_string(value) + " outside [63, 126]");
  }
  return value - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw InputError("empty graph6 string");

  std::size_t pos = 0;
  int n = decode_byte(text[pos++]);
  if (n == 63) {
    // 126 followed by three 6-bit groups (n < 258048).
    if (text.size() < 4) throw InputError("truncated graph6 size field");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | decode_byte(text[pos++]);
    if (n <= 62) throw InputError("graph6 long size form used for n <= 62");
  }
  if (n == 0) throw InputError("graph6 order 0 unsupported");
  if (n > kMaxVertices) {
    throw InputError("graph6 order " + std::to_string(n) + " exceeds 64");
  }

  const int bits = n * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < payload) throw InputError("truncated graph6 payload");
  if (text.size() - pos > payload) throw InputError("trailing bytes after graph6 payload");

  std::array<VertexSet, kMaxVertices> adj{};
  int k = 0;
  for (std::size_t b = 0; b < payload; ++b) {
    const int group = decode_byte(text[pos + b]);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool set = (group >> shift) & 1;
      if (k >= bits) {
        if (set) throw InputError("nonzero graph6 padding bits");
        continue;
      }
      if (!set) continue;
      // Invert pair_index: find column j with j(j-1)/2 <= k.
      int j = 1;
      while ((j + 1) * j / 2 <= k) ++j;
      const int i = k - j * (j - 1) / 2;
      adj[i].insert(j);
      adj[j].insert(i);
    }
  }
  return Graph::from_adjacency(std::span<const VertexSet>(adj.data(), static_cast<std::size_t>(n)));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InputError("graph6 encoding supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet col = g.neighbors(j);
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (col.contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace domgame
