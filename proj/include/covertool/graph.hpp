#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covertool {

// Vertex subsets are bitmasks over the graph's vertex indices.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

struct Edge {
  std::size_t u;
  std::size_t v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple labeled graph. Vertex order is the construction order and fixes every
// deterministic ordering downstream. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates: distinct names, no loops, endpoints known, no duplicate edges.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  static Graph from_index_edges(std::vector<std::string> vertices,
                                const std::vector<Edge>& edges);

  std::size_t order() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws on unknown

  VertexMask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(VertexMask mask) const;
  std::vector<std::size_t> indices_of(VertexMask mask) const;

  VertexMask all() const {
    return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
  }
  VertexMask neighbors(std::size_t i) const { return adj_[i]; }
  VertexMask closed_neighbors(std::size_t i) const {
    return adj_[i] | (VertexMask{1} << i);
  }
  VertexMask closed_neighborhood(VertexMask set) const;
  bool adjacent(std::size_t i, std::size_t j) const {
    return (adj_[i] >> j) & 1U;
  }
  std::size_t degree(std::size_t i) const;

  bool is_independent(VertexMask set) const;
  bool is_vertex_cover(VertexMask set) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void add_edge(std::size_t u, std::size_t v);

  std::vector<std::string> names_;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;  // sorted
};

int popcount(VertexMask m);

// Lexicographic order on the sorted index sequences of two sets.
bool set_lex_less(VertexMask a, VertexMask b);

Graph induced_subgraph(const Graph& g, VertexMask keep);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);

// G \ A: drops the vertices of A and every incident edge.
Graph remove_vertices(const Graph& g, VertexMask drop);

// G \ N_G[F] for an independent set F.
Graph delete_closed_neighborhood(const Graph& g,
                                 const std::vector<std::string>& independent);

// All maximal independent sets, sorted lexicographically (pivoting
// Bron-Kerbosch on the complement).
std::vector<VertexMask> maximal_independent_sets(const Graph& g);

// Complements of maximal_independent_sets(g), in the same order.
std::vector<VertexMask> minimal_vertex_covers(const Graph& g);

struct GraphClass {
  bool has_isolated = false;
  bool bipartite = false;
  bool claw_free = false;
  bool unmixed = false;
  bool very_well_covered = false;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_claw_free(const Graph& g);

// Pairing {x_i, y_i} of a very well-covered graph into a minimal cover
// X = {x_i} and a maximal independent set Y = {y_i}.
struct VwcLabeling {
  std::vector<std::pair<std::string, std::string>> pairs;  // (x_i, y_i)

  std::size_t h() const { return pairs.size(); }

  friend bool operator==(const VwcLabeling&, const VwcLabeling&) = default;
};

// Largest graph accepted by the labeling searches.
inline constexpr std::size_t kMaxLabelingVertices = 24;

// Checks conditions (i)-(iv) of the structure theorem for very well-covered
// graphs. Condition (iv) is read for i != j.
bool is_vwc_labeling(const Graph& g, const VwcLabeling& labeling);

// is_vwc_labeling plus: i <= j whenever {x_i, y_j} is an edge.
bool is_cm_vwc_labeling(const Graph& g, const VwcLabeling& labeling);

std::optional<VwcLabeling> find_vwc_labeling(const Graph& g);
std::optional<VwcLabeling> find_cm_vwc_labeling(const Graph& g);

}  // namespace covertool
