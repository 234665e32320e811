#pragma once

#include "covertool/betti.hpp"
#include "covertool/graph.hpp"
#include "covertool/monomial.hpp"
#include "covertool/report.hpp"

namespace covertool {

inline constexpr const char* kToolVersion = "0.1.0";

// {ambient:[...], gens:[[[var, exp], ...], ...]}
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& json);

// {subject, field, entries:[{i, j, beta}], reg, pd}
Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& json);

// {has_isolated, bipartite, claw_free, unmixed, very_well_covered}
Json to_json(const GraphClass& cls);

// [[x_1, y_1], ...] or null.
Json to_json(const std::optional<VwcLabeling>& labeling);

}  // namespace covertool
