#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coalition/vertex_set.hpp"

namespace coalition {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one neighbor
// bitset per vertex. Immutable once built and safe to share across threads.
// The 64-vertex cap makes every vertex set a single machine word; exact
// search is only feasible far below that anyway.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  static Graph edgeless(int n) { return Graph(n); }

  // Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  // Upper-triangle adjacency bits in column-major order:
  // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2), bit 3 = (0,3), ...
  // Requires n(n-1)/2 <= 64, i.e. n <= 11. Used for exhaustive labeled sweeps.
  static Graph from_triangle_bits(int n, std::uint64_t bits);

  int order() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  VertexSet neighbors(int v) const;           // N(v)
  VertexSet closed_neighborhood(int v) const; // N[v]
  int degree(int v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  // N(S): everything with a neighbor inside S.
  VertexSet neighborhood_of(VertexSet s) const;

  // Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n);
  void add_edge(int u, int v);
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

bool is_connected(const Graph& g);

// Standard labeled representatives: path 0-1-...-(n-1); cycle adds (n-1,0);
// complete bipartite with parts {0..r-1} and {r..r+s-1}; star = center 0.
Graph make_path(int n);
Graph make_cycle(int n);   // n >= 3
Graph make_complete(int n);
Graph make_complete_bipartite(int r, int s);
Graph make_star(int leaves);

// Dispatch by family name ("path", "cycle", "complete", "complete_bipartite",
// "star") with the family's numeric parameters.
Graph make_family(const std::string& name, std::span<const int> params);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degree;
  VertexSet isolated;    // degree 0
  VertexSet full;        // degree n-1
  VertexSet simplicial;  // closed neighborhood is a clique

  bool has_isolated() const { return !isolated.empty(); }
  bool has_full() const { return !full.empty(); }
};

DegreeProfile degree_profile(const Graph& g);

// Text format: first line "n m", then m lines "u v" (0-based); '#' starts a
// comment; blank lines are ignored.
Graph parse_edge_list_text(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace coalition
