#include "coalition/graph.hpp"

#include <istream>
#include <sstream>

#include "coalition/errors.hpp"

namespace coalition {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw DomainError("graph order must be between 1 and " + std::to_string(kMaxVertices) +
                      ", got " + std::to_string(n));
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u) + " (only simple graphs)");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_triangle_bits(int n, std::uint64_t bits) {
  Graph g(n);
  const int m = n * (n - 1) / 2;
  if (m > 64) throw DomainError("triangle-bit form only holds up to 11 vertices");
  int t = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++t) {
      if ((bits >> t) & 1) g.add_edge(row, col);
    }
  }
  if (m < 64 && (bits >> m) != 0) throw DomainError("stray bits beyond the adjacency triangle");
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet(adj_[static_cast<std::size_t>(v)]);
}

VertexSet Graph::closed_neighborhood(int v) const {
  return neighbors(v) | VertexSet::single(v);
}

VertexSet Graph::neighborhood_of(VertexSet s) const {
  std::uint64_t reach = 0;
  for (int v : s) {
    check_vertex(v);
    reach |= adj_[static_cast<std::size_t>(v)];
  }
  return VertexSet(reach);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  const std::uint64_t full = vertices().bits();
  for (int v = 0; v < n_; ++v) {
    g.adj_[static_cast<std::size_t>(v)] =
        full & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
  }
  return g;
}

bool is_connected(const Graph& g) {
  const std::uint64_t full = g.vertices().bits();
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits();
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full;
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, edges);
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph make_complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw DomainError("complete bipartite parts must be nonempty");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < r; ++u)
    for (int v = r; v < r + s; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(r + s, edges);
}

Graph make_star(int leaves) {
  return make_complete_bipartite(1, leaves);
}

Graph make_family(const std::string& name, std::span<const int> params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k) {
      throw DomainError("family '" + name + "' takes " + std::to_string(k) + " parameter(s), got " +
                        std::to_string(params.size()));
    }
  };
  if (name == "path") {
    want(1);
    return make_path(params[0]);
  }
  if (name == "cycle") {
    want(1);
    return make_cycle(params[0]);
  }
  if (name == "complete") {
    want(1);
    return make_complete(params[0]);
  }
  if (name == "complete_bipartite") {
    want(2);
    return make_complete_bipartite(params[0], params[1]);
  }
  if (name == "star") {
    want(1);
    return make_star(params[0]);
  }
  throw DomainError("unknown family '" + name +
                    "' (expected path, cycle, complete, complete_bipartite or star)");
}

DegreeProfile degree_profile(const Graph& g) {
  const int n = g.order();
  DegreeProfile p;
  p.degree.resize(static_cast<std::size_t>(n));
  p.min_degree = n;
  p.max_degree = 0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    p.degree[static_cast<std::size_t>(v)] = d;
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
    if (d == 0) p.isolated.add(v);
    if (d == n - 1) p.full.add(v);

    // simplicial: every two neighbors adjacent, i.e. each neighbor's closed
    // neighborhood swallows N[v]
    const VertexSet closed = g.closed_neighborhood(v);
    bool simp = true;
    for (int u : g.neighbors(v)) {
      if (!closed.subset_of(g.closed_neighborhood(u))) {
        simp = false;
        break;
      }
    }
    if (simp) p.simplicial.add(v);
  }
  return p;
}

namespace {

// Strips '#' comments, returns whitespace tokens.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

Graph parse_edge_list_text(std::istream& in) {
  const std::vector<std::string> tokens = tokenize(in);
  if (tokens.size() < 2) throw ParseError("edge list must start with 'n m'");
  const int n = parse_int(tokens[0], "vertex count");
  const int m = parse_int(tokens[1], "edge count");
  if (m < 0) throw ParseError("negative edge count");
  if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    throw ParseError("expected " + std::to_string(2 * m) + " endpoint tokens after 'n m', got " +
                     std::to_string(tokens.size() - 2));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int u = parse_int(tokens[2 + 2 * static_cast<std::size_t>(i)], "vertex");
    const int v = parse_int(tokens[3 + 2 * static_cast<std::size_t>(i)], "vertex");
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list_text(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace coalition
