#include "covertool/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "covertool/error.hpp"

namespace covertool {

namespace {

std::uint64_t code_for_order(const Graph& g,
                             const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    }
  }
  return code;
}

void permute_blocks(const Graph& g, std::vector<std::size_t>& order,
                    const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                    std::size_t block, std::uint64_t& best) {
  if (block == blocks.size()) {
    best = std::min(best, code_for_order(g, order));
    return;
  }
  const auto [lo, hi] = blocks[block];
  std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo),
            order.begin() + static_cast<std::ptrdiff_t>(hi));
  do {
    permute_blocks(g, order, blocks, block + 1, best);
  } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                 order.begin() + static_cast<std::ptrdiff_t>(hi)));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) {
    throw SizeError("canonical form on " + std::to_string(n) + " vertices",
                    "n<=11");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(a) < g.degree(b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && g.degree(order[hi]) == g.degree(order[lo])) ++hi;
    if (hi - lo > 1) blocks.emplace_back(lo, hi);
    lo = hi;
  }
  std::uint64_t best = ~std::uint64_t{0};
  permute_blocks(g, order, blocks, 0, best);
  return (static_cast<std::uint64_t>(n) << 56) | best;
}

void for_each_corpus_graph(const CorpusOptions& options,
                           const std::function<void(const Graph&)>& visit) {
  if (options.max_n > kMaxCorpusVertices) {
    throw SizeError("corpus up to " + std::to_string(options.max_n) +
                        " vertices",
                    "max_n<=" + std::to_string(kMaxCorpusVertices));
  }
  for (std::size_t n = 1; n <= options.max_n; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<Edge> slots;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) slots.push_back({i, j});
    }
    std::unordered_set<std::uint64_t> classes;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      if (options.no_isolated) {
        VertexMask touched = 0;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if ((bits >> s) & 1U) {
            touched |= (VertexMask{1} << slots[s].u) | (VertexMask{1} << slots[s].v);
          }
        }
        if (std::popcount(touched) != static_cast<int>(n)) continue;
      }
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((bits >> s) & 1U) edges.push_back(slots[s]);
      }
      Graph g = Graph::from_index_edges(names, edges);
      if (options.dedup && !classes.insert(canonical_code(g)).second) continue;
      visit(g);
    }
  }
}

std::vector<Graph> generate_corpus(const CorpusOptions& options) {
  std::vector<Graph> out;
  for_each_corpus_graph(options, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace covertool
