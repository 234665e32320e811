#include "covertool/gk.hpp"

#include <algorithm>
#include <set>

#include "covertool/error.hpp"
#include "covertool/graph_io.hpp"
#include "covertool/monomial.hpp"

namespace covertool {

Graph build_gk(const Graph& g, std::size_t r) {
  if (r == 0) throw InvalidArgument("G_r needs r >= 1");
  if (g.order() * r > kMaxVertices) {
    throw SizeError("G_r would have " + std::to_string(g.order() * r) +
                        " vertices",
                    "n*r<=" + std::to_string(kMaxVertices));
  }
  std::vector<std::string> names;
  for (const auto& v : g.vertices()) {
    for (std::size_t p = 1; p <= r; ++p) names.push_back(polarized_name(v, p));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (std::size_t p = 1; p <= r; ++p) {
      for (std::size_t q = 1; p + q <= r + 1; ++q) {
        const std::size_t a = gk_index(e.u, p, r);
        const std::size_t b = gk_index(e.v, q, r);
        edges.push_back({std::min(a, b), std::max(a, b)});
      }
    }
  }
  return Graph::from_index_edges(std::move(names), edges);
}

std::vector<std::size_t> gk_embedding(std::size_t n, std::size_t r) {
  const std::size_t half = (r + 1) / 2;
  std::vector<std::size_t> image(n * r);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p = 1; p <= r; ++p) {
      const std::size_t target = p <= half ? p : p + 1;
      image[gk_index(v, p, r)] = gk_index(v, target, r + 1);
    }
  }
  return image;
}

bool gk_embeds_as_induced_subgraph(const Graph& g, std::size_t r) {
  const Graph small = build_gk(g, r);
  const Graph large = build_gk(g, r + 1);
  const auto image = gk_embedding(g.order(), r);
  for (std::size_t a = 0; a < small.order(); ++a) {
    for (std::size_t b = a + 1; b < small.order(); ++b) {
      if (small.adjacent(a, b) != large.adjacent(image[a], image[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Generators as sorted lists of variable names.
std::set<std::vector<std::string>> named_generators(const MonomialIdeal& ideal) {
  std::set<std::vector<std::string>> out;
  for (const auto& m : ideal.generators()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i]) names.push_back(ideal.ambient()[i]);
    }
    std::sort(names.begin(), names.end());
    out.insert(std::move(names));
  }
  return out;
}

}  // namespace

VerificationReport verify_gk_identity(const Graph& g, std::size_t r,
                                      const Field& field) {
  VerificationReport report;
  report.theorem = "gk";
  report.graph = canonical_string(g);
  report.params = Json{{"r", r}};
  report.field = field;
  if (r == 0) throw InvalidArgument("G_r needs r >= 1");
  if (classify(g).has_isolated) {
    report.skip("hypothesis: graph has isolated vertices");
    return report;
  }
  if (g.edge_count() == 0) {
    report.skip("hypothesis: graph has no edges");
    return report;
  }
  try {
    const Graph gr = build_gk(g, r);
    const MonomialIdeal lhs = polarize(cover_symbolic_power(g, r));
    const MonomialIdeal rhs = cover_ideal(gr);
    report.quantities["gk_vertices"] = gr.order();
    report.quantities["gk_edges"] = gr.edge_count();
    report.quantities["polarized_generators"] = lhs.size();
    report.quantities["cover_generators"] = rhs.size();
    report.add_claim("generators_equal",
                     named_generators(lhs) == named_generators(rhs));
  } catch (const SizeError& e) {
    report.skip(e.what(), e.bound());
    return report;
  }
  report.conclude();
  return report;
}

}  // namespace covertool
