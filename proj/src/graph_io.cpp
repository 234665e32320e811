#include "covertool/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "covertool/error.hpp"

namespace covertool {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  return line.substr(0, line.find('#'));
}

// Non-empty comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    auto toks = tokens_of(strip_comment(line));
    if (!toks.empty()) out.emplace_back(number, std::move(toks));
    if (nl == std::string_view::npos) break;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Edge> edges;
  const auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [number, toks] : content_lines(text)) {
    if (toks.size() > 2) {
      throw ParseError("expected two vertex names per line", number);
    }
    const std::size_t a = intern(toks[0]);
    if (toks.size() == 1) continue;
    const std::size_t b = intern(toks[1]);
    if (a == b) throw ParseError("loop edge at '" + toks[0] + "'", number);
    const std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError("duplicate edge " + toks[0] + " " + toks[1], number);
    }
    seen.emplace_back(key);
    edges.push_back({key.first, key.second});
  }
  if (names.size() > kMaxVertices) {
    throw SizeError("graph has " + std::to_string(names.size()) + " vertices",
                    "n<=" + std::to_string(kMaxVertices));
  }
  return Graph::from_index_edges(std::move(names), edges);
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) {
      throw ParseError("unsupported graph6 size prefix");
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      n = (n << 6) | static_cast<std::size_t>(line[k] - 63);
    }
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw SizeError("graph has " + std::to_string(n) + " vertices",
                    "n<=" + std::to_string(kMaxVertices));
  }
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError("graph6 string has wrong length for " +
                     std::to_string(n) + " vertices");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = line[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding");
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Graph::from_index_edges(std::move(names), edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() == 1 && lines.front().second.size() == 1) {
    return parse_graph6(lines.front().second.front());
  }
  return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  VertexMask touched = 0;
  for (const Edge& e : g.edges()) {
    out += g.name(e.u) + " " + g.name(e.v) + "\n";
    touched |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!((touched >> i) & 1U)) out += g.name(i) + "\n";
  }
  return out;
}

std::string canonical_string(const Graph& g) {
  auto vertices = g.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::string> edges;
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(g.name(e.u), g.name(e.v));
    edges.push_back(a + "-" + b);
  }
  std::sort(edges.begin(), edges.end());
  std::string out = "V=";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += (i ? "," : "") + vertices[i];
  }
  out += ";E=";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += (i ? "," : "") + edges[i];
  }
  return out;
}

}  // namespace covertool
