#include "coalition/graph6.hpp"

#include <fstream>

#include "coalition/errors.hpp"

namespace coalition {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view record) {
  std::size_t base = 0;
  if (record.starts_with(kHeader)) {
    record.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (record.empty()) throw ParseError("empty graph6 record", base);

  for (std::size_t i = 0; i < record.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte outside the printable graph6 range 63..126", base + i);
    }
  }

  if (static_cast<unsigned char>(record[0]) == 126) {
    throw ParseError("long-size graph6 records (n > 62) are not supported", base);
  }
  const int n = record[0] - kBias;
  if (n == 0) throw ParseError("graph6 record of order 0 (graphs here have at least one vertex)", base);

  const int m = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((m + 5) / 6);
  if (record.size() - 1 != want) {
    throw ParseError("graph6 record for n=" + std::to_string(n) + " needs " + std::to_string(want) +
                         " data byte(s), got " + std::to_string(record.size() - 1),
                     base + record.size());
  }

  std::vector<std::pair<int, int>> edges;
  int row = 0, col = 1;
  for (std::size_t i = 0; i < want; ++i) {
    const int group = record[1 + i] - kBias;
    for (int bit = 5; bit >= 0; --bit) {
      const int t = static_cast<int>(i) * 6 + (5 - bit);
      if (t >= m) {
        if ((group >> bit) & 1) {
          throw ParseError("nonzero padding bit in graph6 record", base + 1 + i);
        }
        continue;
      }
      if ((group >> bit) & 1) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) {
    throw DomainError("graph6 encoding supports at most 62 vertices (single-byte size form)");
  }
  std::string out;
  out.push_back(static_cast<char>(n + kBias));

  const int m = n * (n - 1) / 2;
  int group = 0, filled = 0;
  int row = 0, col = 1;
  for (int t = 0; t < m; ++t) {
    group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
    if (++row == col) {
      row = 0;
      ++col;
    }
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + kBias));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);  // zero padding on the right
    out.push_back(static_cast<char>(group + kBias));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph6 file: " + path.string());
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace coalition
