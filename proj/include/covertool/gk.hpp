#pragma once

#include <cstddef>
#include <vector>

#include "covertool/field.hpp"
#include "covertool/graph.hpp"
#include "covertool/report.hpp"

namespace covertool {

// Vertices v_1..v_r for each v of G (variable-major, polarization naming);
// v_p ~ w_q iff v ~ w in G and p + q <= r + 1. Its cover ideal is the
// polarization of the r-th symbolic power of J(G).
Graph build_gk(const Graph& g, std::size_t r);

// Index of v_p in build_gk(g, r), for vertex index v.
inline std::size_t gk_index(std::size_t v, std::size_t p, std::size_t r) {
  return v * r + (p - 1);
}

// Embedding of build_gk(g, r) into build_gk(g, r + 1): v_p -> v_p for
// p <= floor((r+1)/2), else v_{p+1}. Entry t is the image of vertex t.
std::vector<std::size_t> gk_embedding(std::size_t n, std::size_t r);

// True iff gk_embedding maps build_gk(g, r) isomorphically onto an induced
// subgraph of build_gk(g, r + 1).
bool gk_embeds_as_induced_subgraph(const Graph& g, std::size_t r);

// polarize(J(G)^(r)) == J(build_gk(G, r)), compared by generator names.
VerificationReport verify_gk_identity(const Graph& g, std::size_t r,
                                      const Field& field = Field::rationals());

}  // namespace covertool
