#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "covertool/field.hpp"

namespace covertool {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

struct Claim {
  std::string name;
  bool holds = false;
};

// Evidence for one theorem check on one graph. verdict == pass iff every
// claim holds; a skipped report records why and, for size caps, which bound.
struct VerificationReport {
  std::string theorem;
  std::string graph;  // canonical graph string
  Json params = Json::object();
  Field field;
  Verdict verdict = Verdict::skipped;
  std::vector<Claim> claims;
  Json quantities = Json::object();
  std::string skip_reason;
  std::string size_bound;

  void add_claim(std::string name, bool holds);
  // Sets verdict from the claims (pass when all hold and at least one exists).
  void conclude();
  void skip(std::string reason, std::string bound = {});

  bool passed() const { return verdict == Verdict::pass; }
};

// {theorem, graph, params, field, verdict, evidence}
Json to_json(const VerificationReport& report);

}  // namespace covertool
