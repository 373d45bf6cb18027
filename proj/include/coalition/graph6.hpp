#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

// Decodes one graph6 record (an optional ">>graph6<<" header is stripped).
// Only the single-byte size form is supported, so 1 <= n <= 62; long-size
// records are rejected rather than decoded.
Graph parse_graph6(std::string_view record);

// Canonical graph6 bytes; parse_graph6(encode_graph6(g)) == g. Requires
// n <= 62 (single-byte size form).
std::string encode_graph6(const Graph& g);

// One record per line, blank lines skipped, optional leading header.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

}  // namespace coalition
