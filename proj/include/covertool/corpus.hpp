#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "covertool/graph.hpp"

namespace covertool {

inline constexpr std::size_t kMaxCorpusVertices = 7;

struct CorpusOptions {
  std::size_t max_n = 0;
  bool no_isolated = false;
  // Keep one representative (the first generated) per isomorphism class.
  bool dedup = false;
};

// Visits every labeled graph on x1..xn for n = 1..max_n, ordered by n and
// then by edge bitmask.
void for_each_corpus_graph(const CorpusOptions& options,
                           const std::function<void(const Graph&)>& visit);
std::vector<Graph> generate_corpus(const CorpusOptions& options);

// Isomorphism-invariant code: lexicographically smallest upper-triangle
// adjacency bitstring over vertex orders that sort vertices by degree.
std::uint64_t canonical_code(const Graph& g);

}  // namespace covertool
