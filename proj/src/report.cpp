#include "covertool/report.hpp"

#include <algorithm>

namespace covertool {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "unknown";
}

void VerificationReport::add_claim(std::string name, bool holds) {
  claims.push_back({std::move(name), holds});
}

void VerificationReport::conclude() {
  const bool all = std::all_of(claims.begin(), claims.end(),
                               [](const Claim& c) { return c.holds; });
  verdict = (all && !claims.empty()) ? Verdict::pass : Verdict::fail;
}

void VerificationReport::skip(std::string reason, std::string bound) {
  verdict = Verdict::skipped;
  skip_reason = std::move(reason);
  size_bound = std::move(bound);
}

Json to_json(const VerificationReport& report) {
  Json evidence = Json::object();
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    claims.push_back(Json{{"claim", c.name}, {"holds", c.holds}});
  }
  evidence["claims"] = std::move(claims);
  evidence["quantities"] = report.quantities;
  if (report.verdict == Verdict::skipped) {
    evidence["skip_reason"] = report.skip_reason;
    if (!report.size_bound.empty()) evidence["size_bound"] = report.size_bound;
  }
  Json out = Json::object();
  out["theorem"] = report.theorem;
  out["graph"] = report.graph;
  out["params"] = report.params;
  out["field"] = report.field.token();
  out["verdict"] = to_string(report.verdict);
  out["evidence"] = std::move(evidence);
  return out;
}

}  // namespace covertool
