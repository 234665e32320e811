#include <doctest.h>

#include <random>

#include "covertool/error.hpp"
#include "covertool/simplicial.hpp"
#include "oracles.hpp"

using namespace covertool;

namespace {

using Facets = std::vector<std::vector<std::string>>;

SimplicialComplex complex_of(std::vector<std::string> vertices, const Facets& facets) {
  return SimplicialComplex::from_named_facets(std::move(vertices), facets);
}

// Sum over faces (including the empty face) of (-1)^(|F|-1).
long long alternating_face_count(const SimplicialComplex& c) {
  const auto counts = face_counts(c);
  long long total = 0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    total += (s % 2 == 1 ? 1 : -1) * static_cast<long long>(counts[s]);
  }
  return total;
}

long long euler_of_homology(const std::vector<std::uint64_t>& dims) {
  long long total = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    // dims[d] is H~_{d-1}
    total += (d % 2 == 1 ? 1 : -1) * static_cast<long long>(dims[d]);
  }
  return total;
}

SimplicialComplex random_complex(std::mt19937& rng, std::size_t n,
                                 std::size_t facets) {
  std::uniform_int_distribution<VertexMask> pick(1, (VertexMask{1} << n) - 1);
  std::vector<VertexMask> out;
  for (std::size_t f = 0; f < facets; ++f) out.push_back(pick(rng));
  return SimplicialComplex(oracle::names(n, "v"), out);
}

}  // namespace

TEST_CASE("Stanley-Reisner complex") {
  const MonomialIdeal xy({"x1", "x2"}, {Monomial(std::vector<Exponent>{1, 1})});
  CHECK(stanley_reisner_complex(xy).named_facets() == Facets{{"x1"}, {"x2"}});
  CHECK(stanley_reisner_complex(MonomialIdeal::unit({"x1"})).is_void());
  const Graph c5 = oracle::cycle(5);
  CHECK(stanley_reisner_complex(edge_ideal(c5)) == independence_complex(c5));
  CHECK(independence_complex(c5).facets() == maximal_independent_sets(c5));
  CHECK_THROWS_AS(stanley_reisner_complex(MonomialIdeal(
                      {"x1"}, {Monomial(std::vector<Exponent>{2})})),
                  InvalidArgument);
}

TEST_CASE("independence complex") {
  CHECK(independence_complex(oracle::cycle(5)).facets().size() == 5);
  CHECK(independence_complex(oracle::path(2)).named_facets() ==
        Facets{{"x1"}, {"x2"}});
  const auto edgeless = independence_complex(Graph({"a", "b", "c"}, {}));
  CHECK(edgeless.named_facets() == Facets{{"a", "b", "c"}});
}

TEST_CASE("restriction and link") {
  const auto d = independence_complex(oracle::cycle(5));
  CHECK(restrict(d, std::vector<std::string>{"x1", "x3"}).named_facets() ==
        Facets{{"x1", "x3"}});
  const auto empty = restrict(d, std::vector<std::string>{});
  CHECK(empty.facets() == std::vector<VertexMask>{0});
  const auto v = SimplicialComplex::void_complex({"a", "b"});
  CHECK(restrict(v, std::vector<std::string>{"a"}).is_void());
  CHECK_THROWS_AS(restrict(d, std::vector<std::string>{"zz"}), InvalidArgument);
  CHECK(link(d, std::vector<std::string>{}) == d);
  CHECK(link(d, std::vector<std::string>{"x1"}).named_facets() ==
        Facets{{"x3"}, {"x4"}});
  const auto p4 = independence_complex(oracle::path(4));
  CHECK(link(p4, std::vector<std::string>{"x4"}).named_facets() ==
        Facets{{"x1"}, {"x2"}});
  CHECK_THROWS_AS(link(d, std::vector<std::string>{"x1", "x2"}), InvalidArgument);
}

TEST_CASE("purity and strong connectivity") {
  const auto c5 = purity_and_strong_connectivity(independence_complex(oracle::cycle(5)));
  CHECK(c5.pure);
  CHECK(c5.strongly_connected);
  const auto one = purity_and_strong_connectivity(complex_of({"a", "b"}, {{"a", "b"}}));
  CHECK(one.pure);
  CHECK(one.strongly_connected);
  const auto impure = purity_and_strong_connectivity(
      complex_of({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x3"}}));
  CHECK_FALSE(impure.pure);
  CHECK_FALSE(impure.strongly_connected);
  const auto split = purity_and_strong_connectivity(
      complex_of({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
  CHECK(split.pure);
  CHECK_FALSE(split.strongly_connected);
  CHECK_THROWS_AS(purity_and_strong_connectivity(SimplicialComplex::void_complex({"a"})),
                  InvalidArgument);
}

TEST_CASE("reduced homology") {
  CHECK(reduced_homology_dims(complex_of({"a", "b"}, {{"a"}, {"b"}})) ==
        std::vector<std::uint64_t>{0, 1});
  CHECK(reduced_homology_dims(
            complex_of({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})) ==
        std::vector<std::uint64_t>{0, 0, 1});
  CHECK(reduced_homology_dims(SimplicialComplex({"a"}, {0})) ==
        std::vector<std::uint64_t>{1});
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex({"a"})).empty());
  CHECK(reduced_homology_dims(complex_of({"a", "b", "c"}, {{"a", "b", "c"}})) ==
        std::vector<std::uint64_t>{0, 0, 0, 0});
}

TEST_CASE("homology depends on the field: the real projective plane") {
  // six-vertex triangulation of RP^2
  const Facets rp2 = {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"},
                      {"1", "5", "6"}, {"1", "2", "6"}, {"2", "3", "5"},
                      {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"},
                      {"3", "5", "6"}};
  const auto c = complex_of({"1", "2", "3", "4", "5", "6"}, rp2);
  CHECK(reduced_homology_dims(c, Field::rationals()) ==
        std::vector<std::uint64_t>{0, 0, 0, 0});
  CHECK(reduced_homology_dims(c, Field::prime(2)) ==
        std::vector<std::uint64_t>{0, 0, 1, 1});
  CHECK(reduced_homology_dims(c, Field::prime(3)) ==
        std::vector<std::uint64_t>{0, 0, 0, 0});
}

TEST_CASE("Euler characteristic identity on random complexes") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = random_complex(rng, 3 + trial % 6, 1 + trial % 7);
    const auto dims = reduced_homology_dims(c);
    REQUIRE(euler_of_homology(dims) == alternating_face_count(c));
    REQUIRE(euler_of_homology(reduced_homology_dims(c, Field::prime(2))) ==
            alternating_face_count(c));
  }
}

TEST_CASE("homology ignores facet order") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_complex(rng, 6, 2 + trial % 6);
    auto facets = c.facets();
    std::shuffle(facets.begin(), facets.end(), rng);
    const auto dims = reduced_homology_of_facets(facets, Field::rationals());
    REQUIRE(dims == reduced_homology_dims(c));
  }
}

TEST_CASE("Stanley-Reisner round trip") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::uniform_int_distribution<VertexMask> pick(1, (VertexMask{1} << n) - 1);
    std::vector<Monomial> gens;
    for (int g = 0; g < 1 + trial % 6; ++g) {
      gens.push_back(Monomial::from_support(n, pick(rng)));
    }
    const MonomialIdeal I(oracle::names(n), gens);
    REQUIRE(stanley_reisner_ideal(stanley_reisner_complex(I)) == I);
  }
}
