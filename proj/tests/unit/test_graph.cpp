#include <doctest.h>

#include <random>

#include "covertool/corpus.hpp"
#include "covertool/error.hpp"
#include "covertool/graph.hpp"
#include "oracles.hpp"

using namespace covertool;

namespace {

std::vector<std::vector<std::string>> named(const Graph& g,
                                            const std::vector<VertexMask>& sets) {
  std::vector<std::vector<std::string>> out;
  for (VertexMask s : sets) out.push_back(g.names_of(s));
  return out;
}

using Names = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("graph construction rejects invalid input") {
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), InvalidArgument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "a"}}), InvalidArgument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "c"}}), InvalidArgument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidArgument);
}

TEST_CASE("induced subgraph") {
  const Graph c5 = oracle::cycle(5);
  const Graph sub = induced_subgraph(c5, std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(sub == Graph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}}));
  CHECK(induced_subgraph(c5, c5.vertices()) == c5);
  CHECK(induced_subgraph(c5, std::vector<std::string>{}).order() == 0);
  CHECK_THROWS_AS(induced_subgraph(c5, std::vector<std::string>{"y"}),
                  InvalidArgument);
}

TEST_CASE("delete closed neighborhood") {
  const Graph p3 = oracle::path(3);
  CHECK(delete_closed_neighborhood(p3, {"x2"}).order() == 0);
  const Graph rest = delete_closed_neighborhood(oracle::cycle(5), {"x1"});
  CHECK(rest == Graph({"x3", "x4"}, {{"x3", "x4"}}));
  CHECK(delete_closed_neighborhood(p3, {}) == p3);
  CHECK_THROWS_AS(delete_closed_neighborhood(p3, {"x1", "x2"}), InvalidArgument);
  CHECK_THROWS_AS(delete_closed_neighborhood(p3, {"x9"}), InvalidArgument);
}

TEST_CASE("maximal independent sets and minimal vertex covers") {
  const Graph c5 = oracle::cycle(5);
  CHECK(named(c5, maximal_independent_sets(c5)) ==
        Names{{"x1", "x3"}, {"x1", "x4"}, {"x2", "x4"}, {"x2", "x5"}, {"x3", "x5"}});
  CHECK(named(c5, minimal_vertex_covers(c5)) ==
        Names{{"x2", "x4", "x5"},
              {"x2", "x3", "x5"},
              {"x1", "x3", "x5"},
              {"x1", "x3", "x4"},
              {"x1", "x2", "x4"}});
  const Graph k2 = oracle::path(2);
  CHECK(named(k2, maximal_independent_sets(k2)) == Names{{"x1"}, {"x2"}});
  CHECK(named(k2, minimal_vertex_covers(k2)) == Names{{"x2"}, {"x1"}});
  const Graph empty2({"x1", "x2"}, {});
  CHECK(named(empty2, maximal_independent_sets(empty2)) == Names{{"x1", "x2"}});
  const Graph c4 = oracle::cycle(4);
  Names covers = named(c4, minimal_vertex_covers(c4));
  std::sort(covers.begin(), covers.end());
  CHECK(covers == Names{{"x1", "x3"}, {"x2", "x4"}});
}

TEST_CASE("independent sets agree with the 2^n oracle") {
  for_each_corpus_graph({.max_n = 6}, [](const Graph& g) {
    const auto mis = maximal_independent_sets(g);
    REQUIRE(mis == oracle::maximal_independent_sets(g));
    const auto covers = minimal_vertex_covers(g);
    REQUIRE(covers.size() == mis.size());
    for (std::size_t i = 0; i < mis.size(); ++i) {
      REQUIRE(covers[i] == (g.all() & ~mis[i]));
    }
  });
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 8 + trial % 13;  // up to 20 vertices
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.05 * (trial % 10));
    REQUIRE(maximal_independent_sets(g) == oracle::maximal_independent_sets(g));
  }
}

TEST_CASE("classify") {
  CHECK(classify(oracle::cycle(5)) == GraphClass{false, false, true, true, false});
  CHECK(classify(oracle::cycle(4)) == GraphClass{false, true, true, true, true});
  CHECK_FALSE(classify(oracle::complete_bipartite(1, 3)).claw_free);
  CHECK(classify(Graph({"a", "b", "c"}, {{"a", "b"}})).has_isolated);
  CHECK_FALSE(classify(Graph({"a", "b"}, {})).very_well_covered);
  CHECK(classify(oracle::complete(3)).unmixed);
  CHECK_FALSE(classify(oracle::cycle(3)).bipartite);
}

TEST_CASE("very well-covered labelings") {
  const Graph c4 = oracle::cycle(4);
  const auto lab = find_vwc_labeling(c4);
  REQUIRE(lab);
  CHECK(lab->h() == 2);
  CHECK(is_vwc_labeling(c4, *lab));
  CHECK(is_vwc_labeling(c4, VwcLabeling{{{"x1", "x2"}, {"x3", "x4"}}}));
  CHECK_FALSE(find_vwc_labeling(oracle::cycle(5)));
  const Graph k2 = oracle::path(2);
  CHECK(find_vwc_labeling(k2) == VwcLabeling{{{"x1", "x2"}}});
}

TEST_CASE("Cohen-Macaulay labelings") {
  const Graph p4 = oracle::path(4);
  CHECK(is_cm_vwc_labeling(p4, VwcLabeling{{{"x2", "x1"}, {"x3", "x4"}}}));
  const auto lab = find_cm_vwc_labeling(p4);
  REQUIRE(lab);
  CHECK(is_cm_vwc_labeling(p4, *lab));
  CHECK_FALSE(find_cm_vwc_labeling(oracle::cycle(4)));
  CHECK(find_cm_vwc_labeling(oracle::path(2)) == VwcLabeling{{{"x1", "x2"}}});
  // a matched pair that is not an edge breaks condition (ii)
  CHECK_FALSE(is_vwc_labeling(p4, VwcLabeling{{{"x2", "x4"}, {"x3", "x1"}}}));
}

TEST_CASE("labeling searches are size capped") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 25; i += 2) edges.emplace_back(i, i + 1);
  const Graph big = oracle::from_pairs(26, edges);
  CHECK_THROWS_AS(find_vwc_labeling(big), SizeError);
  CHECK_THROWS_AS(find_cm_vwc_labeling(big), SizeError);
}

TEST_CASE("graph class invariants on the corpus") {
  for_each_corpus_graph({.max_n = 6}, [](const Graph& g) {
    const GraphClass cls = classify(g);
    if (cls.very_well_covered) REQUIRE(cls.unmixed);
    const auto vwc = find_vwc_labeling(g);
    REQUIRE(vwc.has_value() == cls.very_well_covered);
    if (vwc) REQUIRE(is_vwc_labeling(g, *vwc));
    const auto cm = find_cm_vwc_labeling(g);
    if (cm) {
      REQUIRE(vwc.has_value());
      REQUIRE(is_cm_vwc_labeling(g, *cm));
    }
    if (cls.unmixed && cls.bipartite && !cls.has_isolated && g.order() > 0) {
      REQUIRE(cls.very_well_covered);
    }
  });
}
