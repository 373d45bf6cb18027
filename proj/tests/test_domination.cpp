#include <doctest.h>

#include <random>

#include "coalition/domination.hpp"
#include "coalition/errors.hpp"
#include "support/oracles.hpp"

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

VertexSet random_subset(std::mt19937_64& rng, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v) {
    if (rng() & 1) s.add(v);
  }
  return s;
}

}  // namespace

TEST_CASE("domination predicates on the worked examples") {
  CHECK(is_dominating(make_complete(4), VertexSet{0}));
  CHECK(is_dominating(make_cycle(4), VertexSet{0, 2}));
  CHECK(!is_dominating(make_path(4), VertexSet{0}));

  CHECK(is_total_dominating(make_complete(3), VertexSet{0, 1}));
  CHECK(!is_total_dominating(make_cycle(4), VertexSet{0, 2}));
  CHECK(!is_total_dominating(make_cycle(4), VertexSet()));

  CHECK_THROWS_AS(is_dominating(make_path(2), VertexSet{5}), DomainError);
}

TEST_CASE("no singleton is ever total dominating") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.5);
    for (int v = 0; v < g.order(); ++v) {
      CHECK(!is_total_dominating(g, VertexSet::single(v)));
    }
  }
}

TEST_CASE("total domination implies domination, and both are superset-monotone") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.5);
    const VertexSet s = random_subset(rng, g.order());
    if (is_total_dominating(g, s)) CHECK(is_dominating(g, s));

    VertexSet bigger = s;
    bigger.add(static_cast<int>(rng() % static_cast<std::uint64_t>(g.order())));
    if (is_dominating(g, s)) CHECK(is_dominating(g, bigger));
    if (is_total_dominating(g, s)) CHECK(is_total_dominating(g, bigger));
  }
}

TEST_CASE("gamma and gamma_t on the worked examples") {
  for (int n = 2; n <= 6; ++n) CHECK(gamma_t(make_complete(n)).value == 2);
  CHECK(gamma_t(make_cycle(4)).value == 2);
  CHECK(gamma(make_star(3)).value == 1);
  CHECK(gamma(make_star(3)).set == VertexSet{0});

  const DominationCertificate cert = gamma_t(make_cycle(4));
  CHECK(cert.minimum);
  CHECK(cert.kind == DominationKind::total_dominating);
  CHECK(is_total_dominating(make_cycle(4), cert.set));

  CHECK_THROWS_AS(gamma_t(Graph::edgeless(2)), DomainError);
  CHECK_THROWS_AS(gamma_t(make_complete(1)), DomainError);
  CHECK(gamma(Graph::edgeless(3)).value == 3);
}

TEST_CASE("gamma and gamma_t agree with brute force on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.45);
    CAPTURE(format_edge_list(g));
    CHECK(gamma(g).value == oracle::gamma_naive(g));
    const auto brute = oracle::gamma_t_naive(g);
    if (brute) {
      CHECK(gamma_t(g).value == *brute);
    } else {
      CHECK_THROWS_AS(gamma_t(g), DomainError);
    }
  }
}

TEST_CASE("minimality of total dominating sets") {
  CHECK(is_minimal_total_dominating(make_cycle(4), VertexSet{0, 1}));
  CHECK(!is_minimal_total_dominating(make_complete(4), VertexSet{0, 1, 2}));
  CHECK(is_minimal_total_dominating(make_path(4), VertexSet{1, 2}));
  CHECK(!is_minimal_total_dominating(make_path(4), VertexSet{0}));  // not even total dominating
}

TEST_CASE("shrinking keeps the smallest labels") {
  CHECK(shrink_to_minimal_tds(make_complete(4), VertexSet::first_n(4)) == VertexSet{0, 1});
  CHECK(shrink_to_minimal_tds(make_cycle(4), VertexSet{0, 1}) == VertexSet{0, 1});
  CHECK(shrink_to_minimal_tds(make_path(4), VertexSet::first_n(4)) == VertexSet{1, 2});
  CHECK_THROWS_AS(shrink_to_minimal_tds(make_path(4), VertexSet{0}), DomainError);

  std::mt19937_64 rng(23);
  int shrunk = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.6);
    const VertexSet s = random_subset(rng, g.order());
    if (!is_total_dominating(g, s)) continue;
    const VertexSet m = shrink_to_minimal_tds(g, s);
    CHECK(m.subset_of(s));
    CHECK(is_minimal_total_dominating(g, m));
    ++shrunk;
  }
  CHECK(shrunk > 20);  // the property actually got exercised
}

TEST_CASE("domatic and total domatic certificates on the worked examples") {
  const DomaticCertificate c4 = total_domatic(make_cycle(4));
  CHECK(c4.order == 2);
  CHECK(c4.parts.order() == 2);

  CHECK(total_domatic(make_complete(2)).order == 1);
  CHECK(domatic(make_complete(3)).order == 3);
  CHECK(total_domatic(make_star(3)).order == 1);
  CHECK_THROWS_AS(total_domatic(Graph::edgeless(1)), DomainError);
}

TEST_CASE("every part of a domatic certificate re-verifies independently") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    const auto adj = oracle::adjacency(g);

    const DomaticCertificate d = domatic(g);
    for (const VertexSet& part : d.parts.parts()) {
      std::vector<bool> flags(static_cast<std::size_t>(g.order()), false);
      for (int v : part) flags[static_cast<std::size_t>(v)] = true;
      CHECK(oracle::dominating(adj, flags));
    }

    if (!degree_profile(g).has_isolated()) {
      const DomaticCertificate dt = total_domatic(g);
      for (const VertexSet& part : dt.parts.parts()) {
        std::vector<bool> flags(static_cast<std::size_t>(g.order()), false);
        for (int v : part) flags[static_cast<std::size_t>(v)] = true;
        CHECK(oracle::total_dominating(adj, flags));
      }
    }
  }
}

TEST_CASE("domatic orders match brute force on every graph with up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      const Graph g = Graph::from_triangle_bits(n, bits);
      CAPTURE(n);
      CAPTURE(bits);
      CHECK(domatic(g).order == oracle::domatic_naive(g));
      const auto brute = oracle::total_domatic_naive(g);
      if (brute) {
        CHECK(total_domatic(g).order == *brute);
      } else {
        CHECK_THROWS_AS(total_domatic(g), DomainError);
      }
    }
  }
}

TEST_CASE("total domatic order respects the minimum-degree floor") {
  for (int n = 2; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      const Graph g = Graph::from_triangle_bits(n, bits);
      const DegreeProfile prof = degree_profile(g);
      if (prof.has_isolated()) continue;
      const int floor_bound = n / (n - prof.min_degree + 1);
      CHECK(total_domatic(g).order >= floor_bound);
    }
  }
}
