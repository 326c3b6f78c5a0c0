#include "doctest.h"

#include <random>

#include "autograph/error.hpp"
#include "autograph/graph.hpp"

using namespace autograph;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("basic graph operations") {
  Graph k4 = complete(4);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK(k4.edge_count() == 6);
  CHECK_THROWS_AS(k4.degree(4), ParameterError);
  CHECK_THROWS_AS(k4.add_edge(1, 1), ParameterError);
  CHECK(complement(Graph(4)) == k4);
  CHECK(complement(k4).edge_count() == 0);
  Graph u = disjoint_union(Graph(1), Graph(1));
  CHECK(u.n() == 2);
  CHECK(u.edge_count() == 0);
  CHECK(components(disjoint_union(k4, complete(3))).size() == 2);
  CHECK(is_connected(k4));
}

TEST_CASE("combinator properties on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 10;
    Graph g = random_graph(n, 0.4, rng);
    Graph h = random_graph(1 + trial % 7, 0.5, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(complement(g)).degree_sequence() == g.degree_sequence());
    CHECK(complement(g).edge_count() == n * (n - 1) / 2 - g.edge_count());
    Graph u = disjoint_union(g, h);
    CHECK(u.edge_count() == g.edge_count() + h.edge_count());
    for (int a = 0; a < u.n(); ++a) {
      CHECK_FALSE(u.has_edge(a, a));
      for (int b = 0; b < u.n(); ++b) REQUIRE(u.has_edge(a, b) == u.has_edge(b, a));
    }
  }
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(complete(4)) == "C~");
  // Path 0-1-2 plus the published example of a 5-vertex graph.
  Graph p(3, {{0, 1}, {1, 2}});
  CHECK(to_graph6(p) == "Bg");
  Graph five(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
  CHECK(to_graph6(five) == "DQc");
  CHECK(from_graph6(">>graph6<<DQc\n") == five);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(trial % 31, 0.3, rng);
    REQUIRE(from_graph6(to_graph6(g)) == g);
  }
  Graph big = random_graph(70, 0.2, rng);
  CHECK(to_graph6(big)[0] == '~');
  CHECK(from_graph6(to_graph6(big)) == big);
  CHECK_THROWS_AS(from_graph6(""), ParameterError);
  CHECK_THROWS_AS(from_graph6("C~~"), ParameterError);
  CHECK_THROWS_AS(from_graph6("C\x01"), ParameterError);
  CHECK_THROWS_AS(from_graph6("Bh"), ParameterError);  // nonzero padding
}

TEST_CASE("dot export carries labels") {
  Graph g(2, {{0, 1}});
  g.set_label(1, "1'");
  std::string dot = to_dot(g);
  CHECK(dot.find("label=\"1'\"") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
}
