#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

// Largest order graph6_decode accepts; adjacency storage is quadratic.
inline constexpr std::size_t kGraph6MaxOrder = 20000;

// Standard graph6 without header or trailing newline.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header and one trailing newline.
// Throws ParseError carrying the offending byte offset.
Graph graph6_decode(std::string_view text);

// One graph per non-empty line; offsets in errors are relative to `text`.
std::vector<Graph> graph6_decode_lines(std::string_view text);

}  // namespace planar_turan
