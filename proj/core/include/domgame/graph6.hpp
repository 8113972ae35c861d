#pragma once

#include <string>
#include <string_view>

#include "domgame/graph.hpp"

namespace domgame {

/// Decodes one graph6 string (an optional ">>graph6<<" prefix is accepted).
///
/// The decoder is strict: bytes outside [63, 126], truncated or overlong
/// payloads, and nonzero padding bits are all rejected with InputError.
/// Orders up to 64 are accepted, including the four-byte size form.
Graph parse_graph6(std::string_view text);

/// Encodes `g` without header. Only the single-byte size form is produced,
/// so n must be at most 62.
std::string encode_graph6(const Graph& g);

/// Index of the pair (i, j), i < j, in graph6 bit order: (0,1),(0,2),(1,2),(0,3),...
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace domgame
