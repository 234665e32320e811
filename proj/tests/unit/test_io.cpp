#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "covertool/corpus.hpp"
#include "covertool/error.hpp"
#include "covertool/graph_io.hpp"
#include "oracles.hpp"

using namespace covertool;

TEST_CASE("edge-list parsing") {
  const Graph p3 = parse_edge_list("x1 x2\nx2 x3");
  CHECK(p3 == oracle::path(3));
  const Graph g = parse_edge_list("# header\nb a  # trailing\n\nc\n");
  CHECK(g.vertices() == std::vector<std::string>{"b", "a", "c"});
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(parse_edge_list("x1 x1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x1 x2\nx2 x1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x1 x2 x3"), ParseError);
  try {
    parse_edge_list("a b\nb c\nc c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("graph6 decoding and encoding") {
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edge_count() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(star.adjacent(i, 4));
  CHECK(to_graph6(star) == "D?{");
  CHECK(to_graph6(oracle::cycle(5)) == "Dhc");
  CHECK(to_graph6(oracle::path(3)) == "Bg");
  CHECK(to_graph6(oracle::complete(7)) == "F~~~w");
  CHECK(parse_graph6(">>graph6<<Bg") == oracle::path(3));
  CHECK(parse_graph("Dhc") == oracle::cycle(5));
  CHECK(parse_graph("x1 x2\n") == oracle::path(2));
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B!"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);  // nonzero padding
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 40, 0.3);
    REQUIRE(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge-list writer and canonical string") {
  const Graph g = parse_edge_list("b a\nc\n");
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(canonical_string(g) == "V=a,b,c;E=a-b");
  CHECK(canonical_string(parse_edge_list("c\na b\n")) == "V=a,b,c;E=a-b");
}

TEST_CASE("corpus sizes") {
  CHECK(generate_corpus({.max_n = 3, .no_isolated = true}).size() == 5);
  const auto two = generate_corpus({.max_n = 2, .no_isolated = true});
  REQUIRE(two.size() == 1);
  CHECK(two.front() == oracle::path(2));
  const auto dedup3 = generate_corpus({.max_n = 3, .no_isolated = true, .dedup = true});
  CHECK(dedup3.size() == 3);
  CHECK(generate_corpus({.max_n = 4}).size() == 1 + 2 + 8 + 64);
  // labeled graphs without isolated vertices: 0, 1, 4, 41, 768, 27449
  CHECK(generate_corpus({.max_n = 6, .no_isolated = true}).size() ==
        1 + 4 + 41 + 768 + 27449);
  // unlabeled graphs: 1, 2, 4, 11, 34, 156
  CHECK(generate_corpus({.max_n = 6, .dedup = true}).size() ==
        1 + 2 + 4 + 11 + 34 + 156);
  // unlabeled graphs without isolated vertices: 0, 1, 2, 7, 23, 122
  CHECK(generate_corpus({.max_n = 6, .no_isolated = true, .dedup = true}).size() ==
        1 + 2 + 7 + 23 + 122);
  CHECK_THROWS_AS(generate_corpus({.max_n = 8}), SizeError);
}

TEST_CASE("canonical code is an isomorphism invariant") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, 0.45);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      edges.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
    }
    const Graph h = Graph::from_index_edges(oracle::names(n), edges);
    REQUIRE(canonical_code(g) == canonical_code(h));
  }
  CHECK(canonical_code(oracle::path(4)) != canonical_code(oracle::complete_bipartite(1, 3)));
}
