#pragma once

#include <holeforge/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace holeforge {

/// Parse one graph6 line. A leading ">>graph6<<" header and trailing CR/LF are
/// accepted. Throws Graph6Error carrying the offending byte offset.
auto parse_graph6(std::string_view text) -> Graph;

auto write_graph6(const Graph & g) -> std::string;

/// Read every non-blank line of a stream. Lines are graph6 unless the whole
/// stream looks like an edge list (first token is a bare integer), in which
/// case a single graph is returned.
auto read_graphs(std::istream & in) -> std::vector<Graph>;

} // namespace holeforge
