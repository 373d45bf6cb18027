#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "coalition/errors.hpp"
#include "coalition/graph6.hpp"

using namespace coalition;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (flip(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("known records decode to the expected graphs") {
  // values cross-checked against the networkx encoder (see data/make_reference.py)
  const Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);

  CHECK(parse_graph6("D~{") == make_complete(5));
  CHECK(parse_graph6("Cl") == make_cycle(4));
  CHECK(parse_graph6(">>graph6<<Cl") == make_cycle(4));

  CHECK(encode_graph6(make_complete(5)) == "D~{");
  CHECK(encode_graph6(Graph::edgeless(3)) == "B?");
  CHECK(encode_graph6(make_path(4)) == "Ch");
}

TEST_CASE("round trip is the identity on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
    CAPTURE(encode_graph6(g));
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
  // the whole supported size range, up to the single-byte form's cap of 62
  for (int n : {21, 33, 40, 55, 62}) {
    const Graph g = random_graph(rng, n, 0.5);
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("malformed records are rejected with positions") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D~"), ParseError);    // record too short for n=5
  CHECK_THROWS_AS(parse_graph6("D~{{"), ParseError);  // and too long
  CHECK_THROWS_AS(parse_graph6("Cl "), ParseError);   // stray byte below 63
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);     // order 0
  CHECK_THROWS_AS(parse_graph6("~??@"), ParseError);  // long-size form
  CHECK_THROWS_AS(parse_graph6("@\x7f"), ParseError); // byte above 126

  // n=2 with a padding bit set: only the topmost of the six bits is real
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
  CHECK(parse_graph6("A_").edge_count() == 1);

  CHECK_THROWS_AS(encode_graph6(Graph::edgeless(63)), DomainError);

  try {
    parse_graph6("Cl ");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);  // position of the stray space
  }
}

TEST_CASE("reference fixture: parser and encoder agree with an independent implementation") {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/graph6_reference.txt");
  REQUIRE(in.good());
  std::string line;
  int records = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string g6;
    int n = 0, m = 0;
    ls >> g6 >> n >> m;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
      std::string tok;
      ls >> tok;
      const auto dash = tok.find('-');
      edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    const Graph expected = Graph::from_edge_list(n, edges);
    CAPTURE(g6);
    CHECK(parse_graph6(g6) == expected);
    CHECK(encode_graph6(expected) == g6);
    ++records;
  }
  CHECK(records >= 80);
}

TEST_CASE("graph6 files read one record per line with an optional header") {
  const auto graphs = read_graph6_file(std::string(TEST_DATA_DIR) + "/with_header.g6");
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == make_cycle(4));
  CHECK(graphs[1] == make_path(3));
  CHECK(graphs[2] == make_complete(5));
  CHECK_THROWS_AS(read_graph6_file("/nonexistent/corpus.g6"), Error);
}
