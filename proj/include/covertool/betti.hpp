#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covertool/field.hpp"
#include "covertool/monomial.hpp"

namespace covertool {

enum class BettiSubject { ideal, quotient };

// Graded Betti numbers beta_{i,j} of an ideal I. Entries are always those of
// I; a quotient subject only changes the derived reg/pd (shifted by one).
struct BettiTable {
  std::map<std::pair<int, int>, std::uint64_t> entries;  // nonzero only
  BettiSubject subject = BettiSubject::ideal;
  std::string label;
  Field field;

  std::uint64_t at(int i, int j) const;
  bool empty() const { return entries.empty(); }
  BettiTable as_quotient() const;
};

struct ResolutionStats {
  int reg = 0;
  int pd = 0;
};

// reg = max{j - i}, pd = max{i}; for quotients reg - 1 and pd + 1.
ResolutionStats resolution_stats(const BettiTable& table);

// How the homology of each induced subcomplex is obtained.
enum class HomologyRoute {
  // H~(Δ_W) on the restriction of the Stanley-Reisner complex.
  restriction,
  // Alexander duality on W: H~_{|W|-i-2}(Δ_W) = H~_{i-1} of the complex on W
  // with facets W \ supp(u), u in G(I), supp(u) ⊆ W.
  dual_link,
};

struct HochsterOptions {
  Field field;
  // Skip subsets W with a cone vertex (equivalently: enumerate only unions of
  // generator supports).
  bool prune_cones = true;
  HomologyRoute route = HomologyRoute::dual_link;
  // Only compute beta_{i,j} for i <= max_index.
  std::optional<int> max_index;
};

inline HochsterOptions options_for(const Field& field) {
  HochsterOptions options;
  options.field = field;
  return options;
}

inline constexpr std::size_t kMaxHochsterSubsets = std::size_t{1} << 22;

// Hochster's formula on a squarefree ideal (nonzero, non-unit).
BettiTable hochster_betti(const MonomialIdeal& ideal,
                          const HochsterOptions& options = {});

// Via polarization; any nonzero, non-unit monomial ideal.
BettiTable betti(const MonomialIdeal& ideal,
                 const HochsterOptions& options = {});

// Degree histogram of G(I): degree -> count.
std::map<int, std::uint64_t> generator_degree_histogram(
    const MonomialIdeal& ideal);

// All nonzero entries satisfy j - i == degree.
bool is_linear_table(const BettiTable& table, int degree);
// beta_{1,j} == 0 for j != degree + 1.
bool is_linearly_presented_table(const BettiTable& table, int degree);

bool has_linear_resolution(const MonomialIdeal& ideal,
                           const Field& field = Field::rationals());
// Throws InvalidArgument unless the ideal is generated in a single degree.
bool has_linear_presentation(const MonomialIdeal& ideal,
                             const Field& field = Field::rationals());

}  // namespace covertool
