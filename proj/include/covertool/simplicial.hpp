#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covertool/field.hpp"
#include "covertool/graph.hpp"
#include "covertool/monomial.hpp"

namespace covertool {

// A simplicial complex stored by its facets (bitmasks over `vertices`).
// No facets = the void complex; the single facet 0 = the complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Keeps only the inclusion-maximal facets.
  SimplicialComplex(std::vector<std::string> vertices,
                    std::vector<VertexMask> facets);

  static SimplicialComplex void_complex(std::vector<std::string> vertices);
  static SimplicialComplex from_named_facets(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<VertexMask>& facets() const { return facets_; }
  std::vector<std::vector<std::string>> named_facets() const;

  bool is_void() const { return facets_.empty(); }
  // Max facet size - 1; -2 for the void complex.
  int dimension() const;
  bool contains(VertexMask face) const;
  VertexMask mask_of(const std::vector<std::string>& names) const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<VertexMask> facets_;  // sorted by set_lex_less
};

// Faces are the vertex sets containing no generator support.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
// Generated by the minimal non-faces.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);
SimplicialComplex independence_complex(const Graph& g);

// Induced subcomplex on W; the result's vertex set is W.
SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask w);
SimplicialComplex restrict(const SimplicialComplex& complex,
                           const std::vector<std::string>& w);

SimplicialComplex link(const SimplicialComplex& complex, VertexMask face);
SimplicialComplex link(const SimplicialComplex& complex,
                       const std::vector<std::string>& face);

struct Connectivity {
  bool pure = false;
  bool strongly_connected = false;
};

Connectivity purity_and_strong_connectivity(const SimplicialComplex& complex);

// dim H~_d for d = -1..dim, over `field`. The void complex yields an empty
// list; {∅} yields {1}.
std::vector<std::uint64_t> reduced_homology_dims(
    const SimplicialComplex& complex, const Field& field = Field::rationals());

// Same, for a complex given directly by facet masks (need not be maximal).
// With `max_dim`, only d <= max_dim is computed.
std::vector<std::uint64_t> reduced_homology_of_facets(
    std::span<const VertexMask> facets, const Field& field,
    std::optional<int> max_dim = std::nullopt);

// Number of faces per size 0..dim+1 (index 0 is the empty face).
std::vector<std::uint64_t> face_counts(const SimplicialComplex& complex);

// Upper bound on faces materialized by one homology computation.
inline constexpr std::size_t kMaxFaces = std::size_t{1} << 24;

}  // namespace covertool
