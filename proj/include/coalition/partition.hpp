#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

// Ordered list of nonempty, pairwise disjoint vertex sets covering V(G).
// Structure is enforced at construction; part order is preserved as given.
class Partition {
 public:
  // Throws StructuralError when `parts` is not a partition of V(G).
  static Partition over(const Graph& g, std::vector<VertexSet> parts);

  static Partition singletons(const Graph& g);

  // Grammar: parts separated by '|', vertices by ',', e.g. "0,1|2,3".
  static Partition parse(const Graph& g, std::string_view text);

  int order() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  VertexSet part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  int graph_order() const { return n_; }

  // Parts reordered by smallest member, for stable printing.
  Partition canonicalized() const;

  // Inverse of parse(): "0,1|2,3" with members ascending.
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  Partition(std::vector<VertexSet> parts, int n) : parts_(std::move(parts)), n_(n) {}

  std::vector<VertexSet> parts_;
  int n_ = 0;
};

}  // namespace coalition
