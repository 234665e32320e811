#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covertool/graph.hpp"

namespace covertool {

using Exponent = std::uint32_t;
using Ambient = std::vector<std::string>;

// Dense exponent vector over an ambient variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial from_support(std::size_t nvars, VertexMask support);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_[i] = e; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  // Bitmask of variables with positive exponent; requires nvars() <= 64.
  VertexMask support() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, std::uint64_t k);
// a / b; b must divide a.
Monomial quotient(const Monomial& a, const Monomial& b);

// Degree ascending, then exponent vectors in descending lexicographic order.
bool canonical_less(const Monomial& a, const Monomial& b);

// "x1^2*x3" with exponent 1 omitted and variables in ambient order; "1" for
// the unit monomial.
std::string to_string(const Monomial& m, const Ambient& ambient);
Monomial parse_monomial(std::string_view text, const Ambient& ambient);
Monomial monomial_from_powers(
    const std::vector<std::pair<std::string, Exponent>>& powers,
    const Ambient& ambient);

// A monomial ideal stored by its minimal generating set G(I), sorted by
// canonical_less. Empty generator list = zero ideal; [1] = unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Minimalizes and sorts `gens`.
  MonomialIdeal(Ambient ambient, std::vector<Monomial> gens);

  static MonomialIdeal zero(Ambient ambient);
  static MonomialIdeal unit(Ambient ambient);
  // Prime generated by the variables in `vars`.
  static MonomialIdeal prime(Ambient ambient, VertexMask vars);

  const Ambient& ambient() const { return ambient_; }
  std::size_t nvars() const { return ambient_.size(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ambient ambient_;
  std::vector<Monomial> gens_;
};

// Reduces `gens` to its minimal elements under divisibility, canonically
// sorted. Throws if a generator's length does not match the ambient.
std::vector<Monomial> minimal_elements(std::vector<Monomial> gens,
                                       std::size_t nvars);
MonomialIdeal minimalize(const std::vector<Monomial>& gens,
                         const Ambient& ambient);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const Monomial& m, const MonomialIdeal& ideal);
MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t k);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

// Embeds `ideal` into a larger ambient (matched by variable name).
MonomialIdeal extend(const MonomialIdeal& ideal, const Ambient& ambient);

MonomialIdeal edge_ideal(const Graph& g);
// Generated by the products over minimal vertex covers.
MonomialIdeal cover_ideal(const Graph& g);
// Intersection over edges of (x_i, x_j)^k; k = 1 gives the cover ideal.
// An edgeless graph gives the unit ideal.
MonomialIdeal cover_ideal_power_by_edges(const Graph& g, std::uint64_t k);

// Supports of the minimal primes of a squarefree ideal, i.e. the minimal
// transversals of its generator supports, in canonical order.
std::vector<VertexMask> minimal_primes(const MonomialIdeal& ideal);
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::uint64_t k);
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// symbolic_power(cover_ideal(g), k) through the minimal primes of J(G); the
// unit ideal when g has no edges.
MonomialIdeal cover_symbolic_power(const Graph& g, std::uint64_t k);

// Variable i with max exponent a_i becomes i_1..i_{a_i}; variables that never
// occur are dropped.
MonomialIdeal polarize(const MonomialIdeal& ideal);
std::string polarized_name(std::string_view var, std::size_t p);

struct DegreeInfo {
  std::uint64_t degree = 0;
  bool single_degree = false;
};

DegreeInfo max_gen_degree(const MonomialIdeal& ideal);

// Product of all ambient variables.
Monomial all_variables(std::size_t nvars);

}  // namespace covertool
