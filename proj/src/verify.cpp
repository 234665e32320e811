#include "covertool/verify.hpp"

#include <algorithm>
#include <functional>

#include "covertool/betti.hpp"
#include "covertool/error.hpp"
#include "covertool/gk.hpp"
#include "covertool/graph_io.hpp"
#include "covertool/monomial.hpp"

namespace covertool {

namespace {

VerificationReport start(std::string theorem, const Graph& g, Json params,
                         const Field& field) {
  VerificationReport report;
  report.theorem = std::move(theorem);
  report.graph = canonical_string(g);
  report.params = std::move(params);
  report.field = field;
  return report;
}

// Skips the report when g has isolated vertices or no edges.
bool require_proper_graph(const Graph& g, VerificationReport& report) {
  if (classify(g).has_isolated) {
    report.skip("hypothesis: graph has isolated vertices");
    return false;
  }
  if (g.edge_count() == 0) {
    report.skip("hypothesis: graph has no edges");
    return false;
  }
  return true;
}

// Runs body and concludes; a size cap turns the report into a skip.
VerificationReport& run_checked(VerificationReport& report,
                                const std::function<void()>& body) {
  try {
    body();
  } catch (const SizeError& e) {
    report.skip(e.what(), e.bound());
    return report;
  }
  report.conclude();
  return report;
}

Json json_list(const std::vector<long long>& values) {
  Json out = Json::array();
  for (long long v : values) out.push_back(v);
  return out;
}

Json json_flags(const std::vector<bool>& values) {
  Json out = Json::array();
  for (bool v : values) out.push_back(v);
  return out;
}

Json labeling_json(const VwcLabeling& labeling) {
  Json out = Json::array();
  for (const auto& [x, y] : labeling.pairs) out.push_back(Json::array({x, y}));
  return out;
}

void require_power(std::size_t k, std::size_t least, const char* what) {
  if (k < least) {
    throw InvalidArgument(std::string(what) + " must be at least " +
                          std::to_string(least));
  }
}

}  // namespace

VerificationReport verify_main_theorem(const Graph& g, std::size_t k,
                                       const Field& field) {
  require_power(k, 2, "k");
  auto report = start("main", g, Json{{"k", k}}, field);
  if (!require_proper_graph(g, report)) return report;
  return run_checked(report, [&] {
    std::vector<long long> degrees;
    std::vector<bool> single, resolution, presentation;
    for (std::size_t j = 1; j <= k; ++j) {
      const MonomialIdeal power = cover_symbolic_power(g, j);
      const DegreeInfo deg = max_gen_degree(power);
      degrees.push_back(static_cast<long long>(deg.degree));
      single.push_back(deg.single_degree);
      if (!deg.single_degree) {
        resolution.push_back(false);
        presentation.push_back(false);
        continue;
      }
      const BettiTable table = betti(power, options_for(field));
      const int d = static_cast<int>(deg.degree);
      resolution.push_back(is_linear_table(table, d));
      presentation.push_back(is_linearly_presented_table(table, d));
    }
    const auto labeling = find_cm_vwc_labeling(g);
    const bool all_res = std::all_of(resolution.begin(), resolution.end(),
                                     [](bool b) { return b; });
    const bool all_pres = std::all_of(presentation.begin(), presentation.end(),
                                      [](bool b) { return b; });
    const std::vector<bool> conditions = {all_res, resolution.back(), all_pres,
                                          presentation.back(),
                                          labeling.has_value()};
    const bool all_equal =
        std::all_of(conditions.begin(), conditions.end(),
                    [&](bool b) { return b == conditions.front(); });
    report.quantities["degrees"] = json_list(degrees);
    report.quantities["single_degree"] = json_flags(single);
    report.quantities["linear_resolution"] = json_flags(resolution);
    report.quantities["linear_presentation"] = json_flags(presentation);
    report.quantities["conditions"] = json_flags(conditions);
    report.quantities["cm_labeling"] =
        labeling ? labeling_json(*labeling) : Json(nullptr);
    report.quantities["scope"] = "bounded-k evidence: powers 1.." +
                                 std::to_string(k);
    report.quantities["presentation_convention"] =
        "false when not generated in a single degree";
    report.add_claim("conditions_equivalent", all_equal);
  });
}

VerificationReport verify_reg_monotone(const Graph& g, std::size_t kmax,
                                       const Field& field) {
  require_power(kmax, 2, "kmax");
  auto report = start("reg-monotone", g, Json{{"kmax", kmax}}, field);
  if (g.edge_count() == 0) {
    report.skip("hypothesis: graph has no edges");
    return report;
  }
  return run_checked(report, [&] {
    std::vector<long long> regs;
    for (std::size_t k = 1; k <= kmax; ++k) {
      const BettiTable table =
          betti(cover_symbolic_power(g, k), options_for(field)).as_quotient();
      regs.push_back(resolution_stats(table).reg);
    }
    report.quantities["reg_quotient"] = json_list(regs);
    report.add_claim("nondecreasing", std::is_sorted(regs.begin(), regs.end()));
  });
}

VerificationReport verify_deg_linear(const Graph& g, std::size_t kmax,
                                     const Field& field) {
  require_power(kmax, 1, "kmax");
  auto report = start("deg-linear", g, Json{{"kmax", kmax}}, field);
  if (!require_proper_graph(g, report)) return report;
  const GraphClass cls = classify(g);
  if (!cls.unmixed && !cls.claw_free) {
    report.skip("hypothesis: graph is neither unmixed nor claw-free");
    return report;
  }
  return run_checked(report, [&] {
    std::vector<long long> degrees;
    for (std::size_t k = 1; k <= kmax; ++k) {
      degrees.push_back(static_cast<long long>(
          max_gen_degree(cover_symbolic_power(g, k)).degree));
    }
    bool linear = true;
    for (std::size_t k = 1; k <= kmax; ++k) {
      linear = linear && degrees[k - 1] ==
                             static_cast<long long>(k) * degrees.front();
    }
    report.quantities["degrees"] = json_list(degrees);
    report.add_claim("degree_linear_in_k", linear);
  });
}

namespace {

bool deletion_holds(const Graph& g, std::size_t x, std::size_t k) {
  const Ambient& ambient = g.vertices();
  const MonomialIdeal var =
      MonomialIdeal::prime(ambient, VertexMask{1} << x);
  const MonomialIdeal lhs = sum(cover_symbolic_power(g, k), var);
  const Monomial u = Monomial::from_support(ambient.size(), g.neighbors(x));
  const Graph rest = remove_vertices(g, g.closed_neighbors(x));
  const MonomialIdeal j_rest = extend(cover_symbolic_power(rest, k), ambient);
  const MonomialIdeal rhs = sum(product(pow(u, k), j_rest), var);
  return lhs == rhs;
}

}  // namespace

VerificationReport verify_deletion_identity(const Graph& g,
                                            std::string_view vertex,
                                            std::size_t k, const Field& field) {
  require_power(k, 1, "k");
  const std::size_t x = g.index_of(vertex);
  auto report = start("deletion", g,
                      Json{{"k", k}, {"vertex", std::string(vertex)}}, field);
  return run_checked(report, [&] {
    report.add_claim("identity_" + std::string(vertex) + "_k" +
                         std::to_string(k),
                     deletion_holds(g, x, k));
  });
}

VerificationReport verify_deletion_identity_all(const Graph& g, std::size_t k,
                                                const Field& field) {
  require_power(k, 1, "k");
  auto report = start("deletion", g, Json{{"k", k}, {"vertex", "all"}}, field);
  if (g.order() == 0) {
    report.skip("hypothesis: graph has no vertices");
    return report;
  }
  return run_checked(report, [&] {
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t j = 1; j <= k; ++j) {
        report.add_claim("identity_" + g.name(x) + "_k" + std::to_string(j),
                         deletion_holds(g, x, j));
      }
    }
  });
}

VerificationReport verify_colon_identity(const Graph& g, std::size_t k,
                                         const Field& field) {
  require_power(k, 2, "k");
  auto report = start("colon", g, Json{{"k", k}}, field);
  if (!require_proper_graph(g, report)) return report;
  return run_checked(report, [&] {
    const MonomialIdeal lhs =
        colon(cover_symbolic_power(g, k), all_variables(g.order()));
    const MonomialIdeal rhs = cover_symbolic_power(g, k - 2);
    report.quantities["colon_generators"] = lhs.size();
    report.add_claim("colon_equals_lower_power", lhs == rhs);
  });
}

VerificationReport verify_singdeg(const Graph& g, std::size_t k,
                                  const Field& field) {
  require_power(k, 2, "k");
  auto report = start("singdeg", g, Json{{"k", k}}, field);
  if (!require_proper_graph(g, report)) return report;
  return run_checked(report, [&] {
    const DegreeInfo deg = max_gen_degree(cover_symbolic_power(g, k));
    const bool vwc = classify(g).very_well_covered;
    report.quantities["single_degree"] = deg.single_degree;
    report.quantities["very_well_covered"] = vwc;
    report.add_claim("single_degree_implies_very_well_covered",
                     !deg.single_degree || vwc);
  });
}

VerificationReport verify_terai(const Graph& g, const Field& field) {
  auto report = start("terai", g, Json::object(), field);
  if (!require_proper_graph(g, report)) return report;
  return run_checked(report, [&] {
    const int reg_cover =
        resolution_stats(betti(cover_ideal(g), options_for(field))).reg;
    const int pd_edge = resolution_stats(
        betti(edge_ideal(g), options_for(field)).as_quotient()).pd;
    report.quantities["reg_cover_ideal"] = reg_cover;
    report.quantities["pd_edge_quotient"] = pd_edge;
    report.add_claim("reg_equals_pd", reg_cover == pd_edge);
  });
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::main:
      return "main";
    case Theorem::reg_monotone:
      return "reg-monotone";
    case Theorem::deg_linear:
      return "deg-linear";
    case Theorem::deletion:
      return "deletion";
    case Theorem::colon:
      return "colon";
    case Theorem::singdeg:
      return "singdeg";
    case Theorem::terai:
      return "terai";
    case Theorem::gk:
      return "gk";
  }
  return "unknown";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = {
      Theorem::main,  Theorem::reg_monotone, Theorem::deg_linear,
      Theorem::deletion, Theorem::colon,     Theorem::singdeg,
      Theorem::terai, Theorem::gk};
  return all;
}

Theorem parse_theorem(std::string_view token) {
  for (Theorem t : all_theorems()) {
    if (to_string(t) == token) return t;
  }
  throw InvalidArgument("unknown theorem: " + std::string(token));
}

VerificationReport run_verification(const Graph& g, Theorem theorem,
                                    const VerifyParams& params) {
  switch (theorem) {
    case Theorem::main:
      return verify_main_theorem(g, params.k, params.field);
    case Theorem::reg_monotone:
      return verify_reg_monotone(g, params.kmax, params.field);
    case Theorem::deg_linear:
      return verify_deg_linear(g, params.kmax, params.field);
    case Theorem::deletion:
      return params.vertex ? verify_deletion_identity(g, *params.vertex,
                                                      params.k, params.field)
                           : verify_deletion_identity_all(g, params.k,
                                                          params.field);
    case Theorem::colon:
      return verify_colon_identity(g, params.k, params.field);
    case Theorem::singdeg:
      return verify_singdeg(g, params.k, params.field);
    case Theorem::terai:
      return verify_terai(g, params.field);
    case Theorem::gk:
      return verify_gk_identity(g, params.k, params.field);
  }
  throw InvalidArgument("unknown theorem");
}

}  // namespace covertool
