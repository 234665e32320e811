#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covertool/graph.hpp"
#include "covertool/monomial.hpp"

namespace oracle {

using covertool::Exponent;
using covertool::Graph;
using covertool::Monomial;
using covertool::MonomialIdeal;
using covertool::VertexMask;

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Graph from_pairs(std::size_t n,
                        const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [a, b] : edges) {
    named.emplace_back("x" + std::to_string(a), "x" + std::to_string(b));
  }
  return Graph(names(n), named);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < static_cast<int>(n); ++i) e.emplace_back(i, i + 1);
  return from_pairs(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < static_cast<int>(n); ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, static_cast<int>(n));
  return from_pairs(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) e.emplace_back(i, j);
  }
  return from_pairs(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= a; ++i) {
    for (int j = a + 1; j <= a + b; ++j) e.emplace_back(i, j);
  }
  return from_pairs(static_cast<std::size_t>(a + b), e);
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return from_pairs(n, e);
}

inline bool independent(const Graph& g, VertexMask s) {
  for (const auto& e : g.edges()) {
    if ((s >> e.u & 1) && (s >> e.v & 1)) return false;
  }
  return true;
}

// Every subset is tested for independence and maximality.
inline std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexMask> out;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    if (!independent(g, s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!(s >> v & 1) && independent(g, s | VertexMask{1} << v)) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), covertool::set_lex_less);
  return out;
}

// Minimal sets meeting every set in `sets`, over n elements.
inline std::vector<VertexMask> minimal_transversals(
    const std::vector<VertexMask>& sets, std::size_t n) {
  auto hits = [&](VertexMask t) {
    return std::all_of(sets.begin(), sets.end(),
                       [&](VertexMask s) { return (s & t) != 0; });
  };
  std::vector<VertexMask> out;
  for (VertexMask t = 0; t < (VertexMask{1} << n); ++t) {
    if (!hits(t)) continue;
    bool minimal = true;
    for (VertexMask r = t; r && minimal; r &= r - 1) {
      if (hits(t & ~(r & -r))) minimal = false;
    }
    if (minimal) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// m lies in the intersection over edges of (x_i, x_j)^k.
inline bool in_cover_power(const Graph& g, const std::vector<Exponent>& m,
                           Exponent k) {
  for (const auto& e : g.edges()) {
    if (m[e.u] + m[e.v] < k) return false;
  }
  return true;
}

// Minimal generators of J(G)^(k) by scanning the exponent box [0, k]^n.
inline std::vector<std::vector<Exponent>> cover_power_generators(const Graph& g,
                                                                 Exponent k) {
  const std::size_t n = g.order();
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> m(n, 0);
  while (true) {
    if (in_cover_power(g, m, k)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (m[i] == 0) continue;
        --m[i];
        if (in_cover_power(g, m, k)) minimal = false;
        ++m[i];
      }
      if (minimal) out.push_back(m);
    }
    std::size_t i = 0;
    while (i < n && m[i] == k) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Exponent>> exponent_set(const MonomialIdeal& I) {
  std::vector<std::vector<Exponent>> out;
  for (const auto& g : I.generators()) out.push_back(g.exponents());
  std::sort(out.begin(), out.end());
  return out;
}

// Exact rank over the rationals by dense Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<long long>> rows) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Graded Betti numbers of I from the upper Koszul simplicial complex:
// beta_{i,m}(I) = dim H~_{i-1}(K^m) with K^m the squarefree F ⊆ supp(m) such
// that m / x^F lies in I. Every m dividing the lcm of G(I) is visited.
inline std::map<std::pair<int, int>, std::uint64_t> koszul_betti(
    const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  Monomial top(n);
  for (const auto& g : ideal.generators()) top = covertool::lcm(top, g);
  auto member = [&](const std::vector<Exponent>& m) {
    for (const auto& g : ideal.generators()) {
      bool divides = true;
      for (std::size_t v = 0; v < n && divides; ++v) divides = g[v] <= m[v];
      if (divides) return true;
    }
    return false;
  };
  std::map<std::pair<int, int>, std::uint64_t> out;
  std::vector<Exponent> m(n, 0);
  while (true) {
    int degree = 0;
    std::uint32_t support = 0;
    for (std::size_t v = 0; v < n; ++v) {
      degree += static_cast<int>(m[v]);
      if (m[v] > 0) support |= 1U << v;
    }
    // faces of K^m grouped by size
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (std::uint32_t f = support;; f = (f - 1) & support) {
      std::vector<Exponent> q = m;
      for (std::size_t v = 0; v < n; ++v) q[v] -= (f >> v & 1);
      if (member(q)) by_size[std::popcount(f)].push_back(f);
      if (f == 0) break;
    }
    auto rank_from = [&](int size) -> std::size_t {
      if (size == 0 || !by_size.count(size) || !by_size.count(size - 1)) return 0;
      const auto& src = by_size[size];
      const auto& dst = by_size[size - 1];
      std::vector<std::vector<long long>> rows(dst.size(),
                                               std::vector<long long>(src.size()));
      for (std::size_t c = 0; c < src.size(); ++c) {
        int sign = 1;
        for (std::size_t v = 0; v < n; ++v) {
          if (!(src[c] >> v & 1)) continue;
          auto it = std::find(dst.begin(), dst.end(), src[c] & ~(1U << v));
          if (it != dst.end()) rows[it - dst.begin()][c] = sign;
          sign = -sign;
        }
      }
      return rational_rank(rows);
    };
    for (const auto& [size, faces] : by_size) {
      const long long h = static_cast<long long>(faces.size()) -
                          static_cast<long long>(rank_from(size)) -
                          static_cast<long long>(rank_from(size + 1));
      if (h > 0) out[{size, degree}] += static_cast<std::uint64_t>(h);
    }
    std::size_t v = 0;
    while (v < n && m[v] == top[v]) m[v++] = 0;
    if (v == n) break;
    ++m[v];
  }
  return out;
}

// Random monomial ideal: `gens` generators over `nvars` variables with
// exponents in [0, max_exp].
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars,
                                  std::size_t gens, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  std::vector<Monomial> out;
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<Exponent> e(nvars);
    for (auto& x : e) x = exp(rng);
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal(names(nvars), std::move(out));
}

}  // namespace oracle
