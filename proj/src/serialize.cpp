#include "covertool/serialize.hpp"

#include "covertool/error.hpp"

namespace covertool {

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& m : ideal.generators()) {
    Json powers = Json::array();
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i]) powers.push_back(Json::array({ideal.ambient()[i], m[i]}));
    }
    gens.push_back(std::move(powers));
  }
  return Json{{"ambient", ideal.ambient()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json& json) {
  try {
    const Ambient ambient = json.at("ambient").get<Ambient>();
    std::vector<Monomial> gens;
    for (const auto& g : json.at("gens")) {
      std::vector<std::pair<std::string, Exponent>> powers;
      for (const auto& p : g) {
        powers.emplace_back(p.at(0).get<std::string>(), p.at(1).get<Exponent>());
      }
      gens.push_back(monomial_from_powers(powers, ambient));
    }
    return MonomialIdeal(ambient, std::move(gens));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, beta] : table.entries) {
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", beta}});
  }
  Json out;
  out["subject"] =
      table.subject == BettiSubject::quotient ? "quotient" : "ideal";
  if (!table.label.empty()) out["label"] = table.label;
  out["field"] = table.field.token();
  out["entries"] = std::move(entries);
  if (!table.empty()) {
    const ResolutionStats stats = resolution_stats(table);
    out["reg"] = stats.reg;
    out["pd"] = stats.pd;
  }
  return out;
}

BettiTable betti_from_json(const Json& json) {
  try {
    BettiTable table;
    table.subject = json.at("subject").get<std::string>() == "quotient"
                        ? BettiSubject::quotient
                        : BettiSubject::ideal;
    table.label = json.value("label", std::string());
    table.field = Field::parse(json.at("field").get<std::string>());
    for (const auto& e : json.at("entries")) {
      table.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] =
          e.at("beta").get<std::uint64_t>();
    }
    return table;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed Betti JSON: ") + e.what());
  }
}

Json to_json(const GraphClass& cls) {
  return Json{{"has_isolated", cls.has_isolated},
              {"bipartite", cls.bipartite},
              {"claw_free", cls.claw_free},
              {"unmixed", cls.unmixed},
              {"very_well_covered", cls.very_well_covered}};
}

Json to_json(const std::optional<VwcLabeling>& labeling) {
  if (!labeling) return nullptr;
  Json out = Json::array();
  for (const auto& [x, y] : labeling->pairs) out.push_back(Json::array({x, y}));
  return out;
}

}  // namespace covertool
