#include "covertool/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "covertool/error.hpp"

namespace covertool {

int popcount(VertexMask m) { return std::popcount(m); }

bool set_lex_less(VertexMask a, VertexMask b) {
  while (a && b) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw SizeError("graph has " + std::to_string(n) + " vertices",
                    "n<=" + std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  check_order(names_.size());
  adj_.assign(names_.size(), 0);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidArgument("empty vertex name");
    if (!index.emplace(names_[i], i).second) {
      throw InvalidArgument("duplicate vertex '" + names_[i] + "'");
    }
  }
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InvalidArgument("unknown vertex '" + a + "'");
    if (ib == index.end()) throw InvalidArgument("unknown vertex '" + b + "'");
    add_edge(ia->second, ib->second);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_index_edges(std::vector<std::string> vertices,
                              const std::vector<Edge>& edges) {
  Graph g;
  g.names_ = std::move(vertices);
  check_order(g.names_.size());
  g.adj_.assign(g.names_.size(), 0);
  for (const Edge& e : edges) {
    if (e.u >= g.order() || e.v >= g.order()) {
      throw InvalidArgument("edge endpoint out of range");
    }
    g.add_edge(e.u, e.v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InvalidArgument("loop at vertex '" + names_[u] + "'");
  if (adjacent(u, v)) {
    throw InvalidArgument("duplicate edge " + names_[u] + " " + names_[v]);
  }
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
  edges_.push_back({std::min(u, v), std::max(u, v)});
}

std::optional<std::size_t> Graph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Graph::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
}

VertexMask Graph::mask_of(const std::vector<std::string>& names) const {
  VertexMask m = 0;
  for (const auto& n : names) m |= VertexMask{1} << index_of(n);
  return m;
}

std::vector<std::size_t> Graph::indices_of(VertexMask mask) const {
  std::vector<std::size_t> out;
  for (; mask; mask &= mask - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  }
  return out;
}

std::vector<std::string> Graph::names_of(VertexMask mask) const {
  std::vector<std::string> out;
  for (std::size_t i : indices_of(mask)) out.push_back(names_[i]);
  return out;
}

VertexMask Graph::closed_neighborhood(VertexMask set) const {
  VertexMask out = set;
  for (std::size_t i : indices_of(set)) out |= adj_[i];
  return out;
}

std::size_t Graph::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(adj_[i]));
}

bool Graph::is_independent(VertexMask set) const {
  for (std::size_t i : indices_of(set)) {
    if (adj_[i] & set) return false;
  }
  return true;
}

bool Graph::is_vertex_cover(VertexMask set) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return ((set >> e.u) & 1U) || ((set >> e.v) & 1U);
  });
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  std::vector<std::string> names;
  std::vector<std::size_t> remap(g.order(), 0);
  for (std::size_t i : g.indices_of(keep)) {
    remap[i] = names.size();
    names.push_back(g.name(i));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (((keep >> e.u) & 1U) && ((keep >> e.v) & 1U)) {
      edges.push_back({remap[e.u], remap[e.v]});
    }
  }
  return Graph::from_index_edges(std::move(names), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
  return induced_subgraph(g, g.mask_of(keep));
}

Graph remove_vertices(const Graph& g, VertexMask drop) {
  return induced_subgraph(g, g.all() & ~drop);
}

Graph delete_closed_neighborhood(const Graph& g,
                                 const std::vector<std::string>& independent) {
  const VertexMask f = g.mask_of(independent);
  if (!g.is_independent(f)) {
    throw InvalidArgument("vertex set is not independent");
  }
  return remove_vertices(g, g.closed_neighborhood(f));
}

namespace {

// Maximal cliques of the complement == maximal independent sets of g.
void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x,
                   std::vector<VertexMask>& out) {
  if (p == 0) {
    if (x == 0) out.push_back(r);
    return;
  }
  VertexMask pivot_keep = p;
  int best = -1;
  for (VertexMask cand = p | x; cand; cand &= cand - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(cand));
    const int gain = std::popcount(p & ~g.closed_neighbors(u));
    if (gain > best) {
      best = gain;
      pivot_keep = p & g.closed_neighbors(u);
    }
  }
  for (VertexMask todo = pivot_keep; todo; todo &= todo - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(todo));
    const VertexMask bit = VertexMask{1} << v;
    const VertexMask blocked = g.closed_neighbors(v);
    bron_kerbosch(g, r | bit, p & ~blocked, x & ~blocked, out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
  std::vector<VertexMask> out;
  bron_kerbosch(g, 0, g.all(), 0, out);
  std::sort(out.begin(), out.end(), set_lex_less);
  return out;
}

std::vector<VertexMask> minimal_vertex_covers(const Graph& g) {
  auto sets = maximal_independent_sets(g);
  for (auto& s : sets) s = g.all() & ~s;
  return sets;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : g.indices_of(g.neighbors(u))) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (std::size_t c = 0; c < g.order(); ++c) {
    const auto nb = g.indices_of(g.neighbors(c));
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t d = b + 1; d < nb.size(); ++d) {
          if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.neighbors(i) == 0) c.has_isolated = true;
  }
  c.bipartite = is_bipartite(g);
  c.claw_free = is_claw_free(g);
  const auto mis = maximal_independent_sets(g);
  const int first = mis.empty() ? 0 : std::popcount(mis.front());
  c.unmixed = std::all_of(mis.begin(), mis.end(), [&](VertexMask m) {
    return std::popcount(m) == first;
  });
  const std::size_t n = g.order();
  c.very_well_covered = !c.has_isolated && n % 2 == 0 && c.unmixed &&
                        static_cast<std::size_t>(first) * 2 == n;
  return c;
}

namespace {

struct IndexedLabeling {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

bool structure_conditions_hold(const Graph& g, const IndexedLabeling& l) {
  const std::size_t h = l.x.size();
  // (iv), read for i != j
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      if (i != j && g.adjacent(l.x[i], l.y[j]) && g.adjacent(l.x[i], l.x[j])) {
        return false;
      }
    }
  }
  // (iii)
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t zi : {l.x[i], l.y[i]}) {
      for (std::size_t j = 0; j < h; ++j) {
        if (j == i || !g.adjacent(zi, l.x[j])) continue;
        for (std::size_t k = 0; k < h; ++k) {
          if (k == i || k == j) continue;
          if (g.adjacent(l.y[j], l.x[k]) && !g.adjacent(zi, l.x[k])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Order of the pairs with i <= j whenever x_i ~ y_j, or empty when the
// precedence relation has a cycle. Ties resolve to the smallest pair index.
std::optional<std::vector<std::size_t>> cm_order(const Graph& g,
                                                 const IndexedLabeling& l) {
  const std::size_t h = l.x.size();
  std::vector<std::size_t> indegree(h, 0);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      if (i != j && g.adjacent(l.x[i], l.y[j])) ++indegree[j];
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> done(h, false);
  while (order.size() < h) {
    std::size_t next = h;
    for (std::size_t i = 0; i < h; ++i) {
      if (!done[i] && indegree[i] == 0) {
        next = i;
        break;
      }
    }
    if (next == h) return std::nullopt;
    done[next] = true;
    order.push_back(next);
    for (std::size_t j = 0; j < h; ++j) {
      if (j != next && g.adjacent(l.x[next], l.y[j])) --indegree[j];
    }
  }
  return order;
}

VwcLabeling to_names(const Graph& g, const IndexedLabeling& l,
                     const std::vector<std::size_t>& order) {
  VwcLabeling out;
  for (std::size_t i : order) {
    out.pairs.emplace_back(g.name(l.x[i]), g.name(l.y[i]));
  }
  return out;
}

// Depth-first over perfect matchings X -> Y along edges; `accept` decides.
template <typename Accept>
bool match(const Graph& g, IndexedLabeling& l, std::size_t t,
           VertexMask free_y, const std::vector<std::size_t>& xs,
           Accept&& accept) {
  if (t == xs.size()) return accept(l);
  for (VertexMask cand = g.neighbors(xs[t]) & free_y; cand;
       cand &= cand - 1) {
    const auto y = static_cast<std::size_t>(std::countr_zero(cand));
    l.y[t] = y;
    if (match(g, l, t + 1, free_y & ~(VertexMask{1} << y), xs, accept)) {
      return true;
    }
  }
  return false;
}

std::optional<VwcLabeling> search_labeling(const Graph& g, bool want_cm) {
  if (g.order() > kMaxLabelingVertices) {
    throw SizeError("labeling search on " + std::to_string(g.order()) +
                        " vertices",
                    "n<=" + std::to_string(kMaxLabelingVertices));
  }
  if (!classify(g).very_well_covered) return std::nullopt;
  const std::size_t h = g.order() / 2;
  std::optional<VwcLabeling> found;
  // covers in set-lex order so the reported labeling starts from x1 when it can
  auto covers = minimal_vertex_covers(g);
  std::sort(covers.begin(), covers.end(), set_lex_less);
  for (VertexMask cover : covers) {
    if (static_cast<std::size_t>(std::popcount(cover)) != h) continue;
    IndexedLabeling l;
    l.x = g.indices_of(cover);
    l.y.assign(h, 0);
    const bool ok = match(g, l, 0, g.all() & ~cover, l.x,
                          [&](const IndexedLabeling& cand) {
                            if (!structure_conditions_hold(g, cand)) {
                              return false;
                            }
                            std::vector<std::size_t> order(h);
                            for (std::size_t i = 0; i < h; ++i) order[i] = i;
                            if (want_cm) {
                              auto o = cm_order(g, cand);
                              if (!o) return false;
                              order = *o;
                            }
                            found = to_names(g, cand, order);
                            return true;
                          });
    if (ok) return found;
  }
  return std::nullopt;
}

std::optional<IndexedLabeling> resolve(const Graph& g,
                                       const VwcLabeling& labeling) {
  IndexedLabeling l;
  VertexMask seen = 0;
  for (const auto& [x, y] : labeling.pairs) {
    auto ix = g.find(x);
    auto iy = g.find(y);
    if (!ix || !iy) return std::nullopt;
    const VertexMask bits = (VertexMask{1} << *ix) | (VertexMask{1} << *iy);
    if (*ix == *iy || (seen & bits)) return std::nullopt;
    seen |= bits;
    l.x.push_back(*ix);
    l.y.push_back(*iy);
  }
  if (seen != g.all()) return std::nullopt;
  return l;
}

}  // namespace

bool is_vwc_labeling(const Graph& g, const VwcLabeling& labeling) {
  auto l = resolve(g, labeling);
  if (!l) return false;
  VertexMask xs = 0;
  VertexMask ys = 0;
  for (std::size_t i = 0; i < l->x.size(); ++i) {
    xs |= VertexMask{1} << l->x[i];
    ys |= VertexMask{1} << l->y[i];
    if (!g.adjacent(l->x[i], l->y[i])) return false;  // (ii)
  }
  // (i): Y maximal independent <=> X minimal cover, since X = V \ Y.
  if (!g.is_independent(ys)) return false;
  for (std::size_t v : g.indices_of(xs)) {
    if ((g.neighbors(v) & ys) == 0) return false;
  }
  return structure_conditions_hold(g, *l);
}

bool is_cm_vwc_labeling(const Graph& g, const VwcLabeling& labeling) {
  if (!is_vwc_labeling(g, labeling)) return false;
  auto l = resolve(g, labeling);
  for (std::size_t i = 0; i < l->x.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g.adjacent(l->x[i], l->y[j])) return false;
    }
  }
  return true;
}

std::optional<VwcLabeling> find_vwc_labeling(const Graph& g) {
  return search_labeling(g, false);
}

std::optional<VwcLabeling> find_cm_vwc_labeling(const Graph& g) {
  return search_labeling(g, true);
}

}  // namespace covertool
