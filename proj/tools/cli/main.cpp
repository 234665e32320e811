#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cache.hpp"
#include "covertool/covertool.h"
#include "covertool/parallel.hpp"

namespace {

using covertool::cli::Json;
using covertool::cli::ResultCache;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

class ApiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(ct_status status) {
  if (status != CT_OK) throw ApiError(ct_last_error());
}

std::string take(char* s) {
  std::string out(s);
  ct_string_free(s);
  return out;
}

struct GraphDeleter {
  void operator()(ct_graph* g) const { ct_graph_free(g); }
};
struct IdealDeleter {
  void operator()(ct_ideal* i) const { ct_ideal_free(i); }
};
struct ListDeleter {
  void operator()(ct_graph_list* l) const { ct_graph_list_free(l); }
};
using GraphPtr = std::unique_ptr<ct_graph, GraphDeleter>;
using IdealPtr = std::unique_ptr<ct_ideal, IdealDeleter>;
using ListPtr = std::unique_ptr<ct_graph_list, ListDeleter>;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ApiError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct GraphInput {
  std::string path = "-";
  std::string graph6;

  GraphPtr load() const {
    const std::string text = graph6.empty() ? read_input(path) : graph6;
    ct_graph* g = nullptr;
    check(ct_graph_parse(text.c_str(), &g));
    return GraphPtr(g);
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("graph", input.path,
                  "edge-list or graph6 file ('-' reads stdin)");
  cmd->add_option("--g6", input.graph6, "graph6 string given inline");
}

std::string canonical(const ct_graph* g) {
  char* out = nullptr;
  check(ct_graph_canonical(g, &out));
  return take(out);
}

Json ideal_json(const ct_ideal* ideal) {
  char* out = nullptr;
  check(ct_ideal_to_json(ideal, &out));
  Json json = Json::parse(take(out));
  std::uint64_t degree = 0;
  int single = 0;
  if (ct_ideal_generator_count(ideal) > 0) {
    check(ct_ideal_degree(ideal, &degree, &single));
    json["degree"] = degree;
    json["single_degree"] = single != 0;
  }
  return json;
}

IdealPtr make_ideal(const ct_graph* g, const std::string& kind,
                    std::uint32_t k) {
  ct_ideal* base = nullptr;
  check(kind == "edge" ? ct_ideal_edge(g, &base) : ct_ideal_cover(g, &base));
  IdealPtr ideal(base);
  if (k > 1 || kind == "symbolic") {
    ct_ideal* power = nullptr;
    check(ct_ideal_symbolic_power(ideal.get(), k, &power));
    ideal.reset(power);
  }
  return ideal;
}

Json stamp(const std::string& command) {
  return Json{{"version", ct_version()}, {"command", command}};
}

void emit(const Json& json) { std::cout << json.dump(2) << "\n"; }

std::optional<ResultCache> open_cache(const std::string& flag) {
  if (auto path = covertool::cli::resolve_cache_path(flag)) {
    return std::optional<ResultCache>(std::in_place, *path, &std::cerr);
  }
  return std::nullopt;
}

Json to_quotient(Json table) {
  table["subject"] = "quotient";
  if (table.contains("reg")) {
    table["reg"] = table["reg"].get<int>() - 1;
    table["pd"] = table["pd"].get<int>() + 1;
  }
  return table;
}

struct VerifyOptions {
  std::uint32_t k = 2;
  std::uint32_t kmax = 3;
  std::string vertex;
  std::string field = "q";
};

void add_verify_options(CLI::App* cmd, VerifyOptions& opts) {
  cmd->add_option("-k", opts.k, "power k (r for gk)")->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", opts.kmax, "largest power for sequence checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--field", opts.field, "homology field: q or f<p>");
}

// Report JSON and verdict for one graph.
std::pair<Json, ct_verdict> run_verify(const ct_graph* g,
                                       const std::string& theorem,
                                       const VerifyOptions& opts) {
  ct_verify_params params{opts.k, opts.kmax,
                          opts.vertex.empty() ? nullptr : opts.vertex.c_str(),
                          opts.field.c_str()};
  char* json = nullptr;
  ct_verdict verdict = CT_VERDICT_SKIPPED;
  check(ct_verify(g, theorem.c_str(), &params, &json, &verdict));
  return {Json::parse(take(json)), verdict};
}

ct_verdict verdict_of(const Json& report) {
  const std::string v = report.at("verdict").get<std::string>();
  if (v == "pass") return CT_VERDICT_PASS;
  if (v == "fail") return CT_VERDICT_FAIL;
  return CT_VERDICT_SKIPPED;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover ideals of graphs: symbolic powers, Betti numbers and "
               "theorem checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ct_version()));

  GraphInput input;

  auto* classify_cmd = app.add_subcommand("classify", "graph classes and labelings");
  add_graph_input(classify_cmd, input);

  std::string ideal_kind = "cover";
  auto* ideal_cmd = app.add_subcommand("ideal", "cover or edge ideal");
  ideal_cmd->add_option("kind", ideal_kind, "cover | edge")
      ->required()
      ->check(CLI::IsMember({"cover", "edge"}));
  add_graph_input(ideal_cmd, input);

  std::uint32_t k = 2;
  auto* symbolic_cmd =
      app.add_subcommand("symbolic", "symbolic power of the cover ideal");
  symbolic_cmd->add_option("-k", k, "power")->required()->check(CLI::NonNegativeNumber);
  add_graph_input(symbolic_cmd, input);

  bool betti_symbolic = false;
  bool betti_quotient = false;
  std::string betti_ideal = "cover";
  std::string field = "q";
  std::string cache_flag;
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers");
  betti_cmd->add_flag("--symbolic", betti_symbolic,
                      "use the k-th symbolic power of the cover ideal");
  betti_cmd->add_option("-k", k, "power for --symbolic")->check(CLI::PositiveNumber);
  betti_cmd->add_option("--ideal", betti_ideal, "cover | edge")
      ->check(CLI::IsMember({"cover", "edge"}));
  betti_cmd->add_flag("--quotient", betti_quotient, "report S/I instead of I");
  betti_cmd->add_option("--field", field, "homology field: q or f<p>");
  betti_cmd->add_option("--cache", cache_flag, "JSON-lines result cache");
  add_graph_input(betti_cmd, input);

  std::string theorem;
  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "check one theorem on one graph");
  verify_cmd->add_option("theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"main", "reg-monotone", "deg-linear", "deletion",
                             "colon", "singdeg", "terai", "gk"}));
  add_verify_options(verify_cmd, verify_opts);
  verify_cmd->add_option("--vertex", verify_opts.vertex,
                         "deletion vertex (default: every vertex, powers 1..k)");
  add_graph_input(verify_cmd, input);

  std::uint32_t max_n = 0;
  bool dedup = false;
  bool include_isolated = false;
  bool summary_only = false;
  std::size_t jobs = covertool::default_jobs();
  auto* sweep_cmd = app.add_subcommand("sweep", "check a theorem on a corpus");
  sweep_cmd->add_option("--max-n", max_n, "largest vertex count")->required();
  sweep_cmd->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"main", "reg-monotone", "deg-linear", "deletion",
                             "colon", "singdeg", "terai", "gk"}));
  add_verify_options(sweep_cmd, verify_opts);
  sweep_cmd->add_flag("--dedup", dedup, "one graph per isomorphism class");
  sweep_cmd->add_flag("--include-isolated", include_isolated,
                      "keep graphs with isolated vertices");
  sweep_cmd->add_flag("--summary", summary_only,
                      "omit passing and skipped reports");
  sweep_cmd->add_option("--cache", cache_flag, "JSON-lines result cache");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  bool no_isolated = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "enumerate labeled graphs");
  corpus_cmd->add_option("--max-n", max_n, "largest vertex count")->required();
  corpus_cmd->add_flag("--no-isolated", no_isolated, "drop graphs with isolated vertices");
  corpus_cmd->add_flag("--dedup", dedup, "one graph per isomorphism class");

  std::uint32_t r = 2;
  auto* gk_cmd = app.add_subcommand("gk", "the graph G_r");
  gk_cmd->add_option("-r", r, "r >= 1")->check(CLI::PositiveNumber);
  add_graph_input(gk_cmd, input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (classify_cmd->parsed()) {
      const GraphPtr g = input.load();
      char* out = nullptr;
      check(ct_graph_classify_json(g.get(), &out));
      Json json = stamp("classify");
      json.update(Json::parse(take(out)));
      emit(json);
      return kExitOk;
    }
    if (ideal_cmd->parsed() || symbolic_cmd->parsed()) {
      const GraphPtr g = input.load();
      const bool symbolic = symbolic_cmd->parsed();
      const IdealPtr ideal =
          make_ideal(g.get(), symbolic ? "symbolic" : ideal_kind, symbolic ? k : 1);
      Json json = stamp(symbolic ? "symbolic" : "ideal");
      json["graph"] = canonical(g.get());
      json["kind"] = symbolic ? "cover" : ideal_kind;
      if (symbolic) json["k"] = k;
      json["ideal"] = ideal_json(ideal.get());
      emit(json);
      return kExitOk;
    }
    if (betti_cmd->parsed()) {
      const GraphPtr g = input.load();
      const std::uint32_t power = betti_symbolic ? k : 1;
      if (betti_symbolic && betti_ideal == "edge") {
        throw ApiError("--symbolic applies to the cover ideal only");
      }
      const Json key{{"graph", canonical(g.get())},
                     {"kind", "betti:" + betti_ideal},
                     {"k", power},
                     {"field", field}};
      auto compute = [&] {
        const IdealPtr ideal = make_ideal(g.get(), betti_ideal, power);
        char* out = nullptr;
        check(ct_ideal_betti_json(ideal.get(), field.c_str(), 0, &out));
        return Json::parse(take(out));
      };
      auto cache = open_cache(cache_flag);
      Json table = cache ? cache->get_or_compute(key, compute) : compute();
      if (betti_quotient) table = to_quotient(std::move(table));
      Json json = stamp("betti");
      json["graph"] = key["graph"];
      json["kind"] = betti_ideal;
      json["k"] = power;
      json["field"] = field;
      json["table"] = std::move(table);
      emit(json);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const GraphPtr g = input.load();
      auto [report, verdict] = run_verify(g.get(), theorem, verify_opts);
      Json json = stamp("verify");
      json.update(report);
      emit(json);
      return verdict == CT_VERDICT_FAIL ? kExitFail : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      ct_graph_list* raw = nullptr;
      check(ct_corpus_generate(max_n, include_isolated ? 0 : 1, dedup ? 1 : 0,
                               &raw));
      const ListPtr list(raw);
      const std::size_t count = ct_graph_list_size(list.get());
      auto cache = open_cache(cache_flag);
      std::vector<Json> reports(count);
      covertool::parallel_for(count, jobs, [&](std::size_t i) {
        const ct_graph* g = ct_graph_list_at(list.get(), i);
        const Json key{{"graph", canonical(g)},
                       {"kind", "verify:" + theorem},
                       {"k", verify_opts.k},
                       {"kmax", verify_opts.kmax},
                       {"field", verify_opts.field}};
        auto compute = [&] { return run_verify(g, theorem, verify_opts).first; };
        reports[i] = cache ? cache->get_or_compute(key, compute) : compute();
      });
      std::size_t pass = 0, fail = 0, skipped = 0;
      Json listed = Json::array();
      for (auto& report : reports) {
        const ct_verdict v = verdict_of(report);
        pass += v == CT_VERDICT_PASS;
        fail += v == CT_VERDICT_FAIL;
        skipped += v == CT_VERDICT_SKIPPED;
        if (!summary_only || v == CT_VERDICT_FAIL) listed.push_back(std::move(report));
      }
      Json json = stamp("sweep");
      json["theorem"] = theorem;
      json["params"] = Json{{"max_n", max_n},
                            {"k", verify_opts.k},
                            {"kmax", verify_opts.kmax},
                            {"dedup", dedup},
                            {"include_isolated", include_isolated}};
      json["field"] = verify_opts.field;
      json["counts"] = Json{{"graphs", count}, {"pass", pass},
                            {"fail", fail}, {"skipped", skipped}};
      json["reports"] = std::move(listed);
      emit(json);
      return fail ? kExitFail : kExitOk;
    }
    if (corpus_cmd->parsed()) {
      ct_graph_list* raw = nullptr;
      check(ct_corpus_generate(max_n, no_isolated ? 1 : 0, dedup ? 1 : 0, &raw));
      const ListPtr list(raw);
      Json graphs = Json::array();
      for (std::size_t i = 0; i < ct_graph_list_size(list.get()); ++i) {
        char* out = nullptr;
        check(ct_graph_to_graph6(ct_graph_list_at(list.get(), i), &out));
        graphs.push_back(take(out));
      }
      Json json = stamp("corpus");
      json["params"] = Json{{"max_n", max_n}, {"no_isolated", no_isolated},
                            {"dedup", dedup}};
      json["count"] = graphs.size();
      json["graph6"] = std::move(graphs);
      emit(json);
      return kExitOk;
    }
    if (gk_cmd->parsed()) {
      const GraphPtr g = input.load();
      ct_graph* raw = nullptr;
      check(ct_graph_build_gk(g.get(), r, &raw));
      const GraphPtr gr(raw);
      char* out = nullptr;
      check(ct_graph_to_json(gr.get(), &out));
      const Json described = Json::parse(take(out));
      Json json = stamp("gk");
      json["graph"] = canonical(g.get());
      json["r"] = r;
      json["vertices"] = described["vertices"];
      json["edges"] = described["edges"];
      emit(json);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
