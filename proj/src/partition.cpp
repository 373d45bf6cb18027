#include "coalition/partition.hpp"

#include <algorithm>
#include <charconv>

#include "coalition/errors.hpp"

namespace coalition {

Partition Partition::over(const Graph& g, std::vector<VertexSet> parts) {
  const VertexSet all = g.vertices();
  if (parts.empty()) throw StructuralError("a partition needs at least one part");

  VertexSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) {
      throw StructuralError("part " + std::to_string(i + 1) + " is empty");
    }
    if (!parts[i].subset_of(all)) {
      throw StructuralError("part " + std::to_string(i + 1) + " mentions a vertex outside 0.." +
                            std::to_string(g.order() - 1));
    }
    if (seen.intersects(parts[i])) {
      throw StructuralError("part " + std::to_string(i + 1) + " overlaps an earlier part");
    }
    seen |= parts[i];
  }
  if (seen != all) {
    throw StructuralError("parts do not cover the vertex set; missing " + (all - seen).to_string());
  }
  return Partition(std::move(parts), g.order());
}

Partition Partition::singletons(const Graph& g) {
  std::vector<VertexSet> parts;
  parts.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) parts.push_back(VertexSet::single(v));
  return Partition(std::move(parts), g.order());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Partition Partition::parse(const Graph& g, std::string_view text) {
  std::vector<VertexSet> parts;
  for (std::string_view part_text : split(text, '|')) {
    VertexSet part;
    for (std::string_view tok : split(part_text, ',')) {
      tok = trim(tok);
      if (tok.empty()) throw ParseError("empty vertex token in partition '" + std::string(text) + "'");
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("bad vertex index '" + std::string(tok) + "' in partition");
      }
      if (value < 0 || value >= Graph::kMaxVertices) {
        throw ParseError("vertex index " + std::to_string(value) + " out of range");
      }
      part.add(value);
    }
    parts.push_back(part);
  }
  return over(g, std::move(parts));
}

Partition Partition::canonicalized() const {
  std::vector<VertexSet> sorted = parts_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
  return Partition(std::move(sorted), n_);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '|';
    bool first = true;
    for (int v : parts_[i]) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

}  // namespace coalition
