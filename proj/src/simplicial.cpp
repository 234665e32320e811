#include "covertool/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "covertool/error.hpp"
#include "covertool/linear_algebra.hpp"

namespace covertool {

namespace {

std::vector<VertexMask> maximal_sets(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : set_lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> kept;
  for (VertexMask s : sets) {
    const bool inside = std::any_of(kept.begin(), kept.end(),
                                    [&](VertexMask k) { return (s & k) == s; });
    if (!inside) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), set_lex_less);
  return kept;
}

VertexMask full_mask(std::size_t n) {
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Renumbers the bits of `m` selected by `keep` to consecutive positions.
VertexMask compress(VertexMask m, VertexMask keep) {
  VertexMask out = 0;
  int pos = 0;
  for (; keep; keep &= keep - 1, ++pos) {
    if (m & (keep & -keep)) out |= VertexMask{1} << pos;
  }
  return out;
}

std::vector<std::string> select_names(const std::vector<std::string>& names,
                                      VertexMask keep) {
  std::vector<std::string> out;
  for (; keep; keep &= keep - 1) {
    out.push_back(names.at(static_cast<std::size_t>(std::countr_zero(keep))));
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<VertexMask> facets)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > 64) {
    throw SizeError("complex on " + std::to_string(vertices_.size()) +
                        " vertices",
                    "vertices<=64");
  }
  const VertexMask all = full_mask(vertices_.size());
  for (VertexMask f : facets) {
    if (f & ~all) throw InvalidArgument("facet uses an unknown vertex");
  }
  facets_ = maximal_sets(std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(
    std::vector<std::string> vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::from_named_facets(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex shell(std::move(vertices), {});
  std::vector<VertexMask> masks;
  for (const auto& f : facets) masks.push_back(shell.mask_of(f));
  return SimplicialComplex(shell.vertices_, std::move(masks));
}

VertexMask SimplicialComplex::mask_of(
    const std::vector<std::string>& names) const {
  VertexMask m = 0;
  for (const auto& n : names) {
    auto it = std::find(vertices_.begin(), vertices_.end(), n);
    if (it == vertices_.end()) {
      throw InvalidArgument("unknown vertex '" + n + "'");
    }
    m |= VertexMask{1} << (it - vertices_.begin());
  }
  return m;
}

std::vector<std::vector<std::string>> SimplicialComplex::named_facets() const {
  std::vector<std::vector<std::string>> out;
  for (VertexMask f : facets_) out.push_back(select_names(vertices_, f));
  return out;
}

int SimplicialComplex::dimension() const {
  int best = -2;
  for (VertexMask f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

bool SimplicialComplex::contains(VertexMask face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexMask f) { return (face & f) == face; });
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) {
    throw InvalidArgument("Stanley-Reisner complex needs a squarefree ideal");
  }
  const VertexMask all = full_mask(ideal.nvars());
  if (ideal.is_unit()) return SimplicialComplex::void_complex(ideal.ambient());
  if (ideal.is_zero()) return SimplicialComplex(ideal.ambient(), {all});
  std::vector<VertexMask> facets;
  for (VertexMask p : minimal_primes(ideal)) facets.push_back(all & ~p);
  return SimplicialComplex(ideal.ambient(), std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const auto& v = complex.vertices();
  const VertexMask all = full_mask(v.size());
  if (complex.is_void()) return MonomialIdeal::unit(v);
  if (complex.contains(all)) return MonomialIdeal::zero(v);
  std::vector<Monomial> complements;
  for (VertexMask f : complex.facets()) {
    complements.push_back(Monomial::from_support(v.size(), all & ~f));
  }
  std::vector<Monomial> gens;
  for (VertexMask t : minimal_primes(MonomialIdeal(v, complements))) {
    gens.push_back(Monomial::from_support(v.size(), t));
  }
  return MonomialIdeal(v, std::move(gens));
}

SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex(g.vertices(), maximal_independent_sets(g));
}

SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask w) {
  if (w & ~full_mask(complex.vertices().size())) {
    throw InvalidArgument("restriction set has unknown vertices");
  }
  auto names = select_names(complex.vertices(), w);
  if (complex.is_void()) return SimplicialComplex::void_complex(names);
  std::vector<VertexMask> facets;
  for (VertexMask f : complex.facets()) facets.push_back(compress(f & w, w));
  return SimplicialComplex(std::move(names), std::move(facets));
}

SimplicialComplex restrict(const SimplicialComplex& complex,
                           const std::vector<std::string>& w) {
  return restrict(complex, complex.mask_of(w));
}

SimplicialComplex link(const SimplicialComplex& complex, VertexMask face) {
  if (!complex.contains(face)) throw InvalidArgument("not a face");
  const VertexMask rest = full_mask(complex.vertices().size()) & ~face;
  std::vector<VertexMask> facets;
  for (VertexMask f : complex.facets()) {
    if ((f & face) == face) facets.push_back(compress(f & ~face, rest));
  }
  return SimplicialComplex(select_names(complex.vertices(), rest),
                           std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex,
                       const std::vector<std::string>& face) {
  return link(complex, complex.mask_of(face));
}

Connectivity purity_and_strong_connectivity(const SimplicialComplex& complex) {
  if (complex.is_void()) throw InvalidArgument("void complex");
  const auto& facets = complex.facets();
  Connectivity c;
  const int size = std::popcount(facets.front());
  c.pure = std::all_of(facets.begin(), facets.end(),
                       [&](VertexMask f) { return std::popcount(f) == size; });
  if (!c.pure) return c;
  // Facet graph: adjacent when sharing a ridge.
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (!seen[b] && std::popcount(facets[a] & facets[b]) == size - 1) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  c.strongly_connected = reached == facets.size();
  return c;
}

namespace {

void push_subsets(const std::vector<VertexMask>& bits, std::size_t from,
                  std::size_t left, VertexMask acc,
                  std::vector<VertexMask>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i + left <= bits.size(); ++i) {
    push_subsets(bits, i + 1, left - 1, acc | bits[i], out);
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Faces of size <= max_size grouped by size (index = size), each group sorted
// ascending.
std::vector<std::vector<VertexMask>> enumerate_faces(
    std::span<const VertexMask> facets, std::size_t max_size) {
  std::size_t budget = 0;
  std::size_t top = 0;
  for (VertexMask f : facets) {
    const auto s = static_cast<std::size_t>(std::popcount(f));
    top = std::max(top, s);
    for (std::size_t k = 0; k <= std::min(s, max_size); ++k) {
      budget += binomial(s, k);
    }
    if (budget > kMaxFaces) {
      throw SizeError("face enumeration exceeds the cap", "faces<=2^24");
    }
  }
  top = std::min(top, max_size);
  std::vector<VertexMask> all;
  all.reserve(budget);
  for (VertexMask f : facets) {
    if (static_cast<std::size_t>(std::popcount(f)) <= max_size) {
      for (VertexMask sub = f;; sub = (sub - 1) & f) {
        all.push_back(sub);
        if (sub == 0) break;
      }
      continue;
    }
    std::vector<VertexMask> bits;
    for (VertexMask rest = f; rest; rest &= rest - 1) {
      bits.push_back(rest & -rest);
    }
    for (std::size_t k = 0; k <= max_size; ++k) {
      push_subsets(bits, 0, k, 0, all);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::vector<VertexMask>> by_size(top + 1);
  for (VertexMask m : all) {
    by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  }
  return by_size;
}

}  // namespace

std::vector<std::uint64_t> reduced_homology_of_facets(
    std::span<const VertexMask> facets, const Field& field,
    std::optional<int> max_dim) {
  if (facets.empty()) return {};
  int top = 0;
  VertexMask common = ~VertexMask{0};
  for (VertexMask f : facets) {
    top = std::max(top, std::popcount(f));
    common &= f;
  }
  // dims[s] = dim H~_{s-1}, s = 0..len-1
  auto len = static_cast<std::size_t>(top) + 1;
  if (max_dim) len = std::min<std::size_t>(len, std::max(*max_dim + 2, 0));
  std::vector<std::uint64_t> dims(len, 0);
  if (len == 0) return dims;
  if (top == 0) {
    dims[0] = 1;
    return dims;
  }
  if (common != 0) return dims;  // cone

  // Faces up to size len are needed for the rank of the map out of size len.
  const auto faces = enumerate_faces(facets, len);
  // rank[s] = rank of the boundary map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank(len + 1, 0);
  rank[1] = 1;  // every vertex maps onto the empty face
  for (std::size_t s = 2; s < faces.size(); ++s) {
    const auto& lower = faces[s - 1];
    std::vector<SparseColumn> columns;
    columns.reserve(faces[s].size());
    for (VertexMask f : faces[s]) {
      SparseColumn col;
      int i = 0;
      for (VertexMask rest = f; rest; rest &= rest - 1, ++i) {
        const VertexMask facet = f & ~(rest & -rest);
        const auto row = static_cast<std::uint32_t>(
            std::lower_bound(lower.begin(), lower.end(), facet) -
            lower.begin());
        col.emplace_back(row, (i % 2 == 0) ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    rank[s] = matrix_rank(columns, field);
  }
  for (std::size_t s = 0; s < len; ++s) {
    const std::uint64_t chains = s < faces.size() ? faces[s].size() : 0;
    dims[s] = chains - rank[s] - rank[s + 1];
  }
  return dims;
}

std::vector<std::uint64_t> reduced_homology_dims(
    const SimplicialComplex& complex, const Field& field) {
  return reduced_homology_of_facets(complex.facets(), field);
}

std::vector<std::uint64_t> face_counts(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  const auto faces = enumerate_faces(complex.facets(), 64);
  std::vector<std::uint64_t> out;
  for (const auto& group : faces) out.push_back(group.size());
  return out;
}

}  // namespace covertool
