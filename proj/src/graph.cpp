#include "deza/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "deza/error.hpp"

namespace deza {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  if (n > kMaxOrder)
    throw DomainError("order-too-large",
                      "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

void Graph::set_edge(Vertex u, Vertex v) noexcept {
  row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("vertex-out-of-range", "edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") has an endpoint outside 0.." +
                                                   std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw DomainError("loop-edge", "loop at vertex " + std::to_string(u));
    g.set_edge(u, v);
  }
  return g;
}

Graph Graph::from_predicate(std::size_t n, const std::function<bool(Vertex, Vertex)>& adjacent) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) g.set_edge(u, v);
  return g;
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  const std::uint64_t* r = row(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::optional<std::size_t> Graph::valency() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t k = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw DomainError("same-vertex", "common neighbourhood needs two distinct vertices");
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w)
    if (g.adjacent(u, w) && g.adjacent(v, w)) out.push_back(w);
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w = 0; w < g.order(); ++w) {
      if (g.adjacent(u, w) && !dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& d : distances_from(g, v)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

// The adjacency rule is (u1 ~ v1) or (u1 == v1 and u2 ~ v2); the often-quoted
// "u1 ~ u2" form compares coordinates from different factors and is a typo.
Graph lexicographic_product(const Graph& g1, const Graph& g2) {
  const std::size_t n2 = g2.order();
  return Graph::from_predicate(g1.order() * n2, [&](Vertex x, Vertex y) {
    const Vertex u1 = x / n2, u2 = x % n2, v1 = y / n2, v2 = y % n2;
    return g1.adjacent(u1, v1) || (u1 == v1 && g2.adjacent(u2, v2));
  });
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs)
    if (v >= g.order())
      throw DomainError("vertex-out-of-range", "vertex " + std::to_string(v) + " not in graph");
  return Graph::from_predicate(vs.size(), [&](Vertex i, Vertex j) { return g.adjacent(vs[i], vs[j]); });
}

Graph complete_graph(std::size_t n) {
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

Graph cycle_graph(std::size_t n) {
  return Graph::from_predicate(n, [n](Vertex u, Vertex v) { return (u + 1) % n == v || (v + 1) % n == u; });
}

bool is_automorphism(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

Graph relabel(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order())
    throw DomainError("size-mismatch", "permutation size differs from graph order");
  const auto inv = p.inverse();
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return g.adjacent(inv(u), inv(v)); });
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Colouring = std::vector<std::uint32_t>;

struct ColourPair {
  Colouring first;
  Colouring second;
  std::uint32_t classes = 0;
};

// Per-vertex signature: own colour followed by the sorted multiset of
// (colour(w), adjacent(v,w), |N(v,w)|) over all w != v.
std::vector<std::uint64_t> signature(const Graph& g, const Colouring& c, Vertex v) {
  std::vector<std::uint64_t> sig;
  sig.reserve(g.order());
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == v) continue;
    sig.push_back((std::uint64_t{c[w]} << 32) | (std::uint64_t{g.adjacent(v, w)} << 31) |
                  g.common_count(v, w));
  }
  std::sort(sig.begin(), sig.end());
  sig.insert(sig.begin(), c[v]);
  return sig;
}

std::vector<std::size_t> histogram(const Colouring& c, std::uint32_t classes) {
  std::vector<std::size_t> h(classes, 0);
  for (auto x : c) ++h[x];
  return h;
}

// Refines both colourings jointly with a shared signature-to-colour map so
// colours stay comparable. Returns false once histograms diverge.
bool refine(const Graph& g1, const Graph& g2, ColourPair& cp) {
  const std::size_t n = g1.order();
  while (true) {
    std::vector<std::vector<std::uint64_t>> s1(n), s2(n);
    for (Vertex v = 0; v < n; ++v) {
      s1[v] = signature(g1, cp.first, v);
      s2[v] = signature(g2, cp.second, v);
    }
    std::vector<std::vector<std::uint64_t>> all(s1);
    all.insert(all.end(), s2.begin(), s2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto id = [&](const std::vector<std::uint64_t>& s) {
      return static_cast<std::uint32_t>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
    };
    const auto classes = static_cast<std::uint32_t>(all.size());
    for (Vertex v = 0; v < n; ++v) {
      cp.first[v] = id(s1[v]);
      cp.second[v] = id(s2[v]);
    }
    if (histogram(cp.first, classes) != histogram(cp.second, classes)) return false;
    const bool stable = classes == cp.classes;
    cp.classes = classes;
    if (stable) return true;
  }
}

std::optional<VertexPermutation> search(const Graph& g1, const Graph& g2, const ColourPair& cp) {
  const std::size_t n = g1.order();
  if (cp.classes == n) {
    std::vector<Vertex> by_colour(n);
    for (Vertex w = 0; w < n; ++w) by_colour[cp.second[w]] = w;
    std::vector<Vertex> image(n);
    for (Vertex v = 0; v < n; ++v) image[v] = by_colour[cp.first[v]];
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (g1.adjacent(u, v) != g2.adjacent(image[u], image[v])) return std::nullopt;
    return VertexPermutation(std::move(image));
  }

  const auto hist = histogram(cp.first, cp.classes);
  std::uint32_t target = 0;
  std::size_t best = n + 1;
  for (std::uint32_t c = 0; c < cp.classes; ++c) {
    if (hist[c] > 1 && hist[c] < best) {
      best = hist[c];
      target = c;
    }
  }
  const Vertex v = static_cast<Vertex>(std::find(cp.first.begin(), cp.first.end(), target) - cp.first.begin());
  for (Vertex w = 0; w < n; ++w) {
    if (cp.second[w] != target) continue;
    ColourPair next = cp;
    next.first[v] = cp.classes;
    next.second[w] = cp.classes;
    next.classes = cp.classes + 1;
    if (!refine(g1, g2, next)) continue;
    if (auto found = search(g1, g2, next)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexPermutation> find_isomorphism(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.order();
  if (n != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (n == 0) return VertexPermutation::identity(0);
  ColourPair cp{Colouring(n, 0), Colouring(n, 0), 1};
  cp.classes = 0;  // force at least one refinement round
  if (!refine(g1, g2, cp)) return std::nullopt;
  return search(g1, g2, cp);
}

// ---------------------------------------------------------------------------
// Abelian groups and Cayley graphs

AbelianGroup::AbelianGroup(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw DomainError("bad-group", "group needs at least one cyclic factor");
  for (auto o : orders_) {
    if (o == 0) throw DomainError("bad-group", "cyclic factor of order 0");
    order_ *= o;
    if (order_ > Graph::kMaxOrder) throw DomainError("order-too-large", "group order exceeds graph cap");
  }
}

std::size_t AbelianGroup::index(const GroupElement& x) const {
  if (x.size() != orders_.size())
    throw DomainError("bad-element", "group element has " + std::to_string(x.size()) +
                                         " coordinates, expected " + std::to_string(orders_.size()));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto o = static_cast<std::int64_t>(orders_[i]);
    idx = idx * orders_[i] + static_cast<std::size_t>(((x[i] % o) + o) % o);
  }
  return idx;
}

GroupElement AbelianGroup::element(std::size_t index) const {
  GroupElement x(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x[i] = static_cast<std::int64_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return x;
}

std::size_t AbelianGroup::difference(std::size_t x, std::size_t y) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::size_t o = orders_[i];
    const std::size_t xi = x % o, yi = y % o;
    idx += ((xi + o - yi) % o) * stride;
    stride *= o;
    x /= o;
    y /= o;
  }
  return idx;
}

std::size_t AbelianGroup::negate(std::size_t x) const { return difference(0, x); }

Graph cayley_graph(const std::vector<std::size_t>& group_orders, std::span<const GroupElement> connection) {
  const AbelianGroup group(group_orders);
  std::vector<bool> in_set(group.order(), false);
  for (const auto& s : connection) in_set[group.index(s)] = true;
  if (in_set[0]) throw DomainError("identity-in-connection", "connection set contains the identity");
  for (std::size_t x = 0; x < group.order(); ++x)
    if (in_set[x] && !in_set[group.negate(x)])
      throw DomainError("not-inverse-closed", "connection set is not closed under inversion");
  return Graph::from_predicate(group.order(),
                               [&](Vertex x, Vertex y) { return in_set[group.difference(x, y)]; });
}

Graph circulant(std::size_t n, std::span<const std::int64_t> connection) {
  std::vector<GroupElement> elems;
  elems.reserve(connection.size());
  for (auto s : connection) elems.push_back({s});
  return cayley_graph({n}, elems);
}

}  // namespace deza
