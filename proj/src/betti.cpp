#include "covertool/betti.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "covertool/error.hpp"
#include "covertool/simplicial.hpp"

namespace covertool {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

BettiTable BettiTable::as_quotient() const {
  BettiTable out = *this;
  out.subject = BettiSubject::quotient;
  return out;
}

ResolutionStats resolution_stats(const BettiTable& table) {
  if (table.empty()) throw InvalidArgument("empty Betti table");
  ResolutionStats s{std::numeric_limits<int>::min(), 0};
  for (const auto& [key, beta] : table.entries) {
    s.reg = std::max(s.reg, key.second - key.first);
    s.pd = std::max(s.pd, key.first);
  }
  if (table.subject == BettiSubject::quotient) {
    s.reg -= 1;
    s.pd += 1;
  }
  return s;
}

namespace {

std::vector<VertexMask> supports(const MonomialIdeal& ideal) {
  std::vector<VertexMask> out;
  for (const auto& g : ideal.generators()) out.push_back(g.support());
  return out;
}

// Unions of generator supports: exactly the W with no cone vertex in Δ_W.
std::vector<VertexMask> lcm_lattice(const std::vector<VertexMask>& gens) {
  std::unordered_set<VertexMask> seen(gens.begin(), gens.end());
  std::vector<VertexMask> order(seen.begin(), seen.end());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const VertexMask w = order[idx];
    for (VertexMask s : gens) {
      const VertexMask u = w | s;
      if (seen.insert(u).second) {
        order.push_back(u);
        if (order.size() > kMaxHochsterSubsets) {
          throw SizeError("Hochster enumeration exceeds the subset cap",
                          "subsets<=2^22");
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<VertexMask> all_subsets(std::size_t nvars) {
  if (nvars > 22) {
    throw SizeError("Hochster enumeration over 2^" + std::to_string(nvars) +
                        " subsets",
                    "subsets<=2^22");
  }
  std::vector<VertexMask> out;
  for (VertexMask w = 1; w < (VertexMask{1} << nvars); ++w) out.push_back(w);
  return out;
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal,
                          const HochsterOptions& options) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("Betti numbers need a nonzero proper ideal");
  }
  if (!ideal.is_squarefree()) {
    throw InvalidArgument("Hochster's formula needs a squarefree ideal");
  }
  if (ideal.nvars() > 64) {
    throw SizeError("Hochster enumeration over " +
                        std::to_string(ideal.nvars()) + " variables",
                    "vars<=64");
  }
  const auto gens = supports(ideal);
  const auto subsets =
      options.prune_cones ? lcm_lattice(gens) : all_subsets(ideal.nvars());

  std::vector<VertexMask> sr_facets;
  if (options.route == HomologyRoute::restriction) {
    sr_facets = stanley_reisner_complex(ideal).facets();
  }

  BettiTable table;
  table.field = options.field;
  std::vector<VertexMask> facets;
  for (VertexMask w : subsets) {
    const int size = std::popcount(w);
    facets.clear();
    if (options.route == HomologyRoute::dual_link) {
      for (VertexMask s : gens) {
        if ((s & w) == s) facets.push_back(w & ~s);
      }
      if (facets.empty()) continue;  // W is a face: Δ_W is a simplex
      std::optional<int> max_dim;
      if (options.max_index) max_dim = *options.max_index - 1;
      const auto dims = reduced_homology_of_facets(facets, options.field,
                                                   max_dim);
      // dims[t] = dim H~_{t-1} on the dual side, contributing to i = t.
      for (std::size_t t = 0; t < dims.size(); ++t) {
        if (dims[t]) table.entries[{static_cast<int>(t), size}] += dims[t];
      }
    } else {
      for (VertexMask f : sr_facets) facets.push_back(f & w);
      std::optional<int> max_dim;
      const auto dims = reduced_homology_of_facets(facets, options.field,
                                                   max_dim);
      // dims[t] = dim H~_{t-1}(Δ_W), contributing to i = |W| - 1 - t.
      for (std::size_t t = 0; t < dims.size(); ++t) {
        const int i = size - 1 - static_cast<int>(t);
        if (i < 0 || !dims[t]) continue;
        if (options.max_index && i > *options.max_index) continue;
        table.entries[{i, size}] += dims[t];
      }
    }
  }
  return table;
}

BettiTable betti(const MonomialIdeal& ideal, const HochsterOptions& options) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("Betti numbers need a nonzero proper ideal");
  }
  return hochster_betti(polarize(ideal), options);
}

std::map<int, std::uint64_t> generator_degree_histogram(
    const MonomialIdeal& ideal) {
  std::map<int, std::uint64_t> out;
  for (const auto& g : ideal.generators()) {
    ++out[static_cast<int>(g.degree())];
  }
  return out;
}

bool is_linear_table(const BettiTable& table, int degree) {
  return std::all_of(table.entries.begin(), table.entries.end(),
                     [&](const auto& kv) {
                       return kv.first.second - kv.first.first == degree;
                     });
}

bool is_linearly_presented_table(const BettiTable& table, int degree) {
  return std::all_of(table.entries.begin(), table.entries.end(),
                     [&](const auto& kv) {
                       return kv.first.first != 1 ||
                              kv.first.second == degree + 1;
                     });
}

bool has_linear_resolution(const MonomialIdeal& ideal, const Field& field) {
  const auto deg = max_gen_degree(ideal);
  if (!deg.single_degree) return false;
  HochsterOptions options;
  options.field = field;
  return is_linear_table(betti(ideal, options), static_cast<int>(deg.degree));
}

bool has_linear_presentation(const MonomialIdeal& ideal, const Field& field) {
  const auto deg = max_gen_degree(ideal);
  if (!deg.single_degree) {
    throw InvalidArgument(
        "linear presentation is defined only for single-degree ideals");
  }
  HochsterOptions options;
  options.field = field;
  options.max_index = 1;
  return is_linearly_presented_table(betti(ideal, options),
                                     static_cast<int>(deg.degree));
}

}  // namespace covertool
