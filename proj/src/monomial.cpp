#include "covertool/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>

#include "covertool/error.hpp"

namespace covertool {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("monomial exponent overflow");
  }
  return out;
}

void require_mask_width(std::size_t nvars) {
  if (nvars > 64) {
    throw SizeError("operation needs at most 64 variables, got " +
                        std::to_string(nvars),
                    "vars<=64");
  }
}

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) {
    throw InvalidArgument("ideals live in different ambient rings");
  }
}

void require_squarefree_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("zero ideal");
  if (ideal.is_unit()) throw InvalidArgument("unit ideal");
  if (!ideal.is_squarefree()) {
    throw InvalidArgument("ideal is not squarefree");
  }
  require_mask_width(ideal.nvars());
}

// Keeps the inclusion-minimal masks, sorted by (size, lexicographic).
std::vector<VertexMask> minimal_masks(std::vector<VertexMask> masks) {
  std::sort(masks.begin(), masks.end(), [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : set_lex_less(a, b);
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<VertexMask> kept;
  for (VertexMask m : masks) {
    const bool redundant = std::any_of(
        kept.begin(), kept.end(), [&](VertexMask k) { return (k & m) == k; });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

}  // namespace

Monomial Monomial::from_support(std::size_t nvars, VertexMask support) {
  Monomial m(nvars);
  for (; support; support &= support - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(support));
    if (i >= nvars) throw InvalidArgument("support outside ambient");
    m.exps_[i] = 1;
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

VertexMask Monomial::support() const {
  require_mask_width(exps_.size());
  VertexMask m = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i]) m |= VertexMask{1} << i;
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.set(i, std::max(a[i], b[i]));
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.set(i, std::min(a[i], b[i]));
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    out.set(i, checked_add(a[i], b[i]));
  }
  return out;
}

Monomial pow(const Monomial& a, std::uint64_t k) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} * k;
    if (k != 0 && e / k != a[i]) throw OverflowError("exponent overflow");
    if (e > std::numeric_limits<Exponent>::max()) {
      throw OverflowError("monomial exponent overflow");
    }
    out.set(i, static_cast<Exponent>(e));
  }
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw InvalidArgument("monomial does not divide");
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.set(i, a[i] - b[i]);
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(
      b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
      a.exponents().end());
}

std::string to_string(const Monomial& m, const Ambient& ambient) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ambient.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t variable_index(std::string_view name, const Ambient& ambient) {
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (ambient[i] == name) return i;
  }
  throw InvalidArgument("variable '" + std::string(name) +
                        "' is not in the ambient ring");
}

}  // namespace

Monomial parse_monomial(std::string_view text, const Ambient& ambient) {
  Monomial m(ambient.size());
  text = trim(text);
  if (text == "1") return m;
  if (text.empty()) throw ParseError("empty monomial");
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{}
                                          : text.substr(star + 1);
    if (star != std::string_view::npos && trim(text).empty()) {
      throw ParseError("dangling '*' in monomial");
    }
    Exponent e = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      auto digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("bad exponent in '" + std::string(factor) + "'");
      }
      factor = trim(factor.substr(0, caret));
    }
    if (factor.empty()) throw ParseError("empty variable name in monomial");
    const std::size_t i = variable_index(factor, ambient);
    m.set(i, checked_add(m[i], e));
  }
  return m;
}

Monomial monomial_from_powers(
    const std::vector<std::pair<std::string, Exponent>>& powers,
    const Ambient& ambient) {
  Monomial m(ambient.size());
  for (const auto& [name, e] : powers) {
    const std::size_t i = variable_index(name, ambient);
    m.set(i, checked_add(m[i], e));
  }
  return m;
}

std::vector<Monomial> minimal_elements(std::vector<Monomial> gens,
                                       std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) {
      throw InvalidArgument("generator uses a variable outside the ambient");
    }
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant = std::any_of(
        kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(Ambient ambient, std::vector<Monomial> gens)
    : ambient_(std::move(ambient)),
      gens_(minimal_elements(std::move(gens), ambient_.size())) {}

MonomialIdeal MonomialIdeal::zero(Ambient ambient) {
  return MonomialIdeal(std::move(ambient), {});
}

MonomialIdeal MonomialIdeal::unit(Ambient ambient) {
  const std::size_t n = ambient.size();
  return MonomialIdeal(std::move(ambient), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::prime(Ambient ambient, VertexMask vars) {
  const std::size_t n = ambient.size();
  std::vector<Monomial> gens;
  for (; vars; vars &= vars - 1) {
    gens.push_back(Monomial::from_support(
        n, VertexMask{1} << std::countr_zero(vars)));
  }
  return MonomialIdeal(std::move(ambient), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens,
                         const Ambient& ambient) {
  return MonomialIdeal(ambient, gens);
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  }
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(u * v);
  }
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const Monomial& m, const MonomialIdeal& ideal) {
  if (m.nvars() != ideal.nvars()) {
    throw InvalidArgument("monomial outside the ambient ring");
  }
  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators()) gens.push_back(m * u);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t k) {
  MonomialIdeal out = MonomialIdeal::unit(ideal.ambient());
  for (std::uint64_t i = 0; i < k; ++i) out = product(out, ideal);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != ideal.nvars()) {
    throw InvalidArgument("monomial outside the ambient ring");
  }
  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators()) gens.push_back(quotient(u, gcd(u, m)));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal extend(const MonomialIdeal& ideal, const Ambient& ambient) {
  std::vector<std::size_t> target(ideal.nvars());
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    target[i] = variable_index(ideal.ambient()[i], ambient);
  }
  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators()) {
    Monomial m(ambient.size());
    for (std::size_t i = 0; i < u.nvars(); ++i) m.set(target[i], u[i]);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(ambient, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) {
    gens.push_back(Monomial::from_support(
        g.order(), (VertexMask{1} << e.u) | (VertexMask{1} << e.v)));
  }
  return MonomialIdeal(g.vertices(), std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (VertexMask c : minimal_vertex_covers(g)) {
    gens.push_back(Monomial::from_support(g.order(), c));
  }
  return MonomialIdeal(g.vertices(), std::move(gens));
}

MonomialIdeal cover_ideal_power_by_edges(const Graph& g, std::uint64_t k) {
  MonomialIdeal out = MonomialIdeal::unit(g.vertices());
  for (const Edge& e : g.edges()) {
    const auto p = MonomialIdeal::prime(
        g.vertices(), (VertexMask{1} << e.u) | (VertexMask{1} << e.v));
    out = intersect(out, power(p, k));
  }
  return out;
}

std::vector<VertexMask> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree_proper(ideal);
  // Iterated intersection of the primes (supp u), kept as masks.
  std::vector<VertexMask> transversals{0};
  for (const auto& u : ideal.generators()) {
    const VertexMask s = u.support();
    std::vector<VertexMask> next;
    next.reserve(transversals.size() * 2);
    for (VertexMask t : transversals) {
      if (t & s) {
        next.push_back(t);
        continue;
      }
      for (VertexMask rest = s; rest; rest &= rest - 1) {
        next.push_back(t | (VertexMask{1} << std::countr_zero(rest)));
      }
    }
    transversals = minimal_masks(std::move(next));
  }
  // Canonical ideal order: degree ascending, then descending exponent lex.
  std::vector<Monomial> as_monomials;
  for (VertexMask t : transversals) {
    as_monomials.push_back(Monomial::from_support(ideal.nvars(), t));
  }
  std::sort(as_monomials.begin(), as_monomials.end(), canonical_less);
  std::vector<VertexMask> out;
  for (const auto& m : as_monomials) out.push_back(m.support());
  return out;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::uint64_t k) {
  const auto primes = minimal_primes(ideal);
  MonomialIdeal out = MonomialIdeal::unit(ideal.ambient());
  if (k == 0) return out;
  for (VertexMask p : primes) {
    out = intersect(out, power(MonomialIdeal::prime(ideal.ambient(), p), k));
  }
  return out;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (VertexMask p : minimal_primes(ideal)) {
    gens.push_back(Monomial::from_support(ideal.nvars(), p));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal cover_symbolic_power(const Graph& g, std::uint64_t k) {
  const MonomialIdeal j = cover_ideal(g);
  if (j.is_unit()) return j;
  return symbolic_power(j, k);
}

std::string polarized_name(std::string_view var, std::size_t p) {
  return std::string(var) + "_" + std::to_string(p);
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("cannot polarize the zero ideal");
  const std::size_t n = ideal.nvars();
  std::vector<Exponent> top(n, 0);
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], u[i]);
  }
  Ambient ambient;
  std::vector<std::size_t> offset(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = ambient.size();
    for (Exponent p = 1; p <= top[i]; ++p) {
      ambient.push_back(polarized_name(ideal.ambient()[i], p));
    }
  }
  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators()) {
    Monomial m(ambient.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (Exponent p = 0; p < u[i]; ++p) m.set(offset[i] + p, 1);
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(std::move(ambient), std::move(gens));
}

DegreeInfo max_gen_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("zero ideal has no generators");
  DegreeInfo info;
  info.degree = ideal.generators().back().degree();
  info.single_degree =
      ideal.generators().front().degree() == info.degree;
  return info;
}

Monomial all_variables(std::size_t nvars) {
  return Monomial(std::vector<Exponent>(nvars, 1));
}

}  // namespace covertool
