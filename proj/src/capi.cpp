#include "covertool/covertool.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "covertool/betti.hpp"
#include "covertool/corpus.hpp"
#include "covertool/error.hpp"
#include "covertool/gk.hpp"
#include "covertool/graph_io.hpp"
#include "covertool/monomial.hpp"
#include "covertool/serialize.hpp"
#include "covertool/verify.hpp"

struct ct_graph {
  covertool::Graph graph;
};

struct ct_ideal {
  covertool::MonomialIdeal ideal;
};

struct ct_graph_list {
  std::vector<ct_graph> graphs;
};

namespace {

thread_local std::string last_error;

ct_status fail(ct_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
ct_status guarded(Body&& body) {
  using covertool::ErrorCode;
  try {
    body();
    last_error.clear();
    return CT_OK;
  } catch (const covertool::Error& e) {
    switch (e.code()) {
      case ErrorCode::invalid_argument:
        return fail(CT_ERR_INVALID_ARGUMENT, e.what());
      case ErrorCode::parse:
        return fail(CT_ERR_PARSE, e.what());
      case ErrorCode::size_limit:
        return fail(CT_ERR_SIZE, e.what());
      case ErrorCode::overflow:
        return fail(CT_ERR_OVERFLOW, e.what());
      case ErrorCode::internal:
        break;
    }
    return fail(CT_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CT_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw covertool::InvalidArgument(std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

covertool::Field field_of(const char* token) {
  return token ? covertool::Field::parse(token) : covertool::Field::rationals();
}

covertool::Json graph_json(const covertool::Graph& graph) {
  using covertool::Json;
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(Json::array({graph.name(e.u), graph.name(e.v)}));
  }
  Json json;
  json["graph"] = covertool::canonical_string(graph);
  json["vertices"] = graph.vertices();
  json["edges"] = std::move(edges);
  return json;
}

}  // namespace

extern "C" {

const char* ct_version(void) { return covertool::kToolVersion; }

const char* ct_last_error(void) { return last_error.c_str(); }

void ct_string_free(char* s) { delete[] s; }

ct_status ct_graph_parse(const char* text, ct_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new ct_graph{covertool::parse_graph(text)};
  });
}

void ct_graph_free(ct_graph* g) { delete g; }

size_t ct_graph_order(const ct_graph* g) { return g ? g->graph.order() : 0; }

size_t ct_graph_edge_count(const ct_graph* g) {
  return g ? g->graph.edge_count() : 0;
}

ct_status ct_graph_canonical(const ct_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(covertool::canonical_string(g->graph));
  });
}

ct_status ct_graph_to_graph6(const ct_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(covertool::to_graph6(g->graph));
  });
}

ct_status ct_graph_to_edge_list(const ct_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(covertool::to_edge_list(g->graph));
  });
}

ct_status ct_graph_to_json(const ct_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(graph_json(g->graph).dump());
  });
}

ct_status ct_graph_classify_json(const ct_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const covertool::Graph& graph = g->graph;
    covertool::Json json = graph_json(graph);
    json["class"] = covertool::to_json(covertool::classify(graph));
    if (graph.order() <= covertool::kMaxLabelingVertices) {
      json["vwc_labeling"] =
          covertool::to_json(covertool::find_vwc_labeling(graph));
      json["cm_labeling"] =
          covertool::to_json(covertool::find_cm_vwc_labeling(graph));
    }
    *out = dup_string(json.dump());
  });
}

ct_status ct_graph_build_gk(const ct_graph* g, uint32_t r, ct_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new ct_graph{covertool::build_gk(g->graph, r)};
  });
}

ct_status ct_ideal_cover(const ct_graph* g, ct_ideal** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new ct_ideal{covertool::cover_ideal(g->graph)};
  });
}

ct_status ct_ideal_edge(const ct_graph* g, ct_ideal** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new ct_ideal{covertool::edge_ideal(g->graph)};
  });
}

ct_status ct_ideal_symbolic_power(const ct_ideal* ideal, uint32_t k,
                                  ct_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = new ct_ideal{covertool::symbolic_power(ideal->ideal, k)};
  });
}

ct_status ct_ideal_polarize(const ct_ideal* ideal, ct_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = new ct_ideal{covertool::polarize(ideal->ideal)};
  });
}

void ct_ideal_free(ct_ideal* ideal) { delete ideal; }

size_t ct_ideal_generator_count(const ct_ideal* ideal) {
  return ideal ? ideal->ideal.size() : 0;
}

ct_status ct_ideal_to_json(const ct_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = dup_string(covertool::to_json(ideal->ideal).dump());
  });
}

ct_status ct_ideal_degree(const ct_ideal* ideal, uint64_t* degree,
                          int* single_degree) {
  return guarded([&] {
    require(ideal, "ideal");
    const auto info = covertool::max_gen_degree(ideal->ideal);
    if (degree) *degree = info.degree;
    if (single_degree) *single_degree = info.single_degree ? 1 : 0;
  });
}

ct_status ct_ideal_betti_json(const ct_ideal* ideal, const char* field,
                              int quotient, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    covertool::BettiTable table =
        covertool::betti(ideal->ideal, covertool::options_for(field_of(field)));
    if (quotient) table = table.as_quotient();
    *out = dup_string(covertool::to_json(table).dump());
  });
}

ct_status ct_ideal_has_linear_resolution(const ct_ideal* ideal,
                                         const char* field, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = covertool::has_linear_resolution(ideal->ideal, field_of(field));
  });
}

ct_status ct_ideal_has_linear_presentation(const ct_ideal* ideal,
                                           const char* field, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = covertool::has_linear_presentation(ideal->ideal, field_of(field));
  });
}

ct_status ct_verify(const ct_graph* g, const char* theorem,
                    const ct_verify_params* params, char** json,
                    ct_verdict* verdict) {
  return guarded([&] {
    require(g, "graph");
    require(theorem, "theorem");
    covertool::VerifyParams p;
    if (params) {
      if (params->k) p.k = params->k;
      if (params->kmax) p.kmax = params->kmax;
      if (params->vertex) p.vertex = params->vertex;
      p.field = field_of(params->field);
    }
    const auto report = covertool::run_verification(
        g->graph, covertool::parse_theorem(theorem), p);
    if (json) *json = dup_string(covertool::to_json(report).dump());
    if (verdict) {
      switch (report.verdict) {
        case covertool::Verdict::pass:
          *verdict = CT_VERDICT_PASS;
          break;
        case covertool::Verdict::fail:
          *verdict = CT_VERDICT_FAIL;
          break;
        case covertool::Verdict::skipped:
          *verdict = CT_VERDICT_SKIPPED;
          break;
      }
    }
  });
}

ct_status ct_corpus_generate(uint32_t max_n, int no_isolated, int dedup,
                             ct_graph_list** out) {
  return guarded([&] {
    require(out, "out");
    auto list = std::make_unique<ct_graph_list>();
    covertool::for_each_corpus_graph(
        {.max_n = max_n, .no_isolated = no_isolated != 0, .dedup = dedup != 0},
        [&](const covertool::Graph& g) { list->graphs.push_back({g}); });
    *out = list.release();
  });
}

size_t ct_graph_list_size(const ct_graph_list* list) {
  return list ? list->graphs.size() : 0;
}

const ct_graph* ct_graph_list_at(const ct_graph_list* list, size_t i) {
  if (!list || i >= list->graphs.size()) return nullptr;
  return &list->graphs[i];
}

void ct_graph_list_free(ct_graph_list* list) { delete list; }

}  // extern "C"
