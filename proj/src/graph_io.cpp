#include "deza/graph_io.hpp"

#include <istream>
#include <sstream>

#include "deza/error.hpp"

namespace deza {

namespace {

constexpr int kBias = 63;

DomainError malformed(const std::string& why) { return DomainError("malformed-graph6", why); }

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw malformed("empty graph6 string");
  for (char c : text)
    if (c < kBias || c > 126) throw malformed("byte outside the graph6 alphabet");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - kBias);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw malformed("unsupported graph6 order header");
    n = (static_cast<std::size_t>(text[1] - kBias) << 12) |
        (static_cast<std::size_t>(text[2] - kBias) << 6) | static_cast<std::size_t>(text[3] - kBias);
    pos = 4;
  }
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw malformed("expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                    std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (k % 6 != 0) {
    const int byte = text[pos + k / 6] - kBias;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw malformed("non-zero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw DomainError("malformed-edge-list", "first line must be \"n m\" with non-negative integers");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0)
      throw DomainError("malformed-edge-list", "edge line " + std::to_string(i + 1) + " is not \"u v\"");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw DomainError("malformed-edge-list", "trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace deza
