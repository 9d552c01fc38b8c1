#include "deza/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "deza/error.hpp"
#include "deza/finite_field.hpp"

namespace deza {

namespace {

std::size_t checked_param(const FamilySpec& spec, std::size_t i, long long min, const char* name) {
  if (spec.params.size() <= i)
    throw DomainError("missing-parameter", std::string("missing parameter ") + name);
  const long long v = spec.params[i];
  if (v < min)
    throw DomainError("invalid-parameter",
                      std::string(name) + " must be at least " + std::to_string(min) + ", got " +
                          std::to_string(v));
  return static_cast<std::size_t>(v);
}

void require_order(std::size_t n) {
  if (n > Graph::kMaxOrder)
    throw DomainError("graph-too-large", "graph would have " + std::to_string(n) +
                                             " vertices, above the limit of " +
                                             std::to_string(Graph::kMaxOrder));
}

// Unordered pair {x, y} of 1-based elements for the vertex index v of T(n).
std::vector<std::pair<std::size_t, std::size_t>> triangular_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);
  return pairs;
}

void validate_switching(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order())
    throw DomainError("size-mismatch", "permutation on " + std::to_string(p.size()) +
                                           " points applied to a graph on " +
                                           std::to_string(g.order()) + " vertices");
  if (!is_automorphism(g, p))
    throw DomainError("not-automorphism", "permutation " + p.to_cycles() + " is not an automorphism");
  if (!p.is_involution())
    throw DomainError("not-involution", "permutation " + p.to_cycles() + " has order greater than 2");
  for (Vertex v = 0; v < g.order(); ++v)
    if (p(v) != v && g.adjacent(v, p(v)))
      throw DomainError("moves-adjacent-pair", "permutation swaps adjacent vertices " +
                                                   std::to_string(v) + " and " +
                                                   std::to_string(p(v)));
}

// Equitable colouring of a single graph, used to prune the involution search.
std::vector<std::size_t> refined_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::size_t> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (Vertex v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = ids[sig[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

struct InvolutionSearch {
  const Graph& g;
  std::vector<std::size_t> colour;
  std::vector<Vertex> image;
  std::vector<bool> assigned;
  std::vector<Vertex> order;  // vertices assigned so far
  std::vector<VertexPermutation> found;
  std::size_t limit;

  bool consistent(Vertex v, Vertex w) const {
    for (Vertex u : order) {
      if (g.adjacent(v, u) != g.adjacent(w, image[u])) return false;
      if (g.adjacent(w, u) != g.adjacent(v, image[u])) return false;
    }
    return true;
  }

  void run(Vertex start) {
    if (found.size() >= limit) return;
    Vertex v = start;
    while (v < g.order() && assigned[v]) ++v;
    if (v == g.order()) {
      found.emplace_back(image);
      return;
    }
    std::vector<Vertex> choices{v};
    for (Vertex w = v + 1; w < g.order(); ++w)
      if (!assigned[w] && colour[w] == colour[v] && !g.adjacent(v, w)) choices.push_back(w);
    for (Vertex w : choices) {
      if (!consistent(v, w)) continue;
      image[v] = w;
      image[w] = v;
      assigned[v] = assigned[w] = true;
      order.push_back(v);
      if (w != v) order.push_back(w);
      run(v + 1);
      if (w != v) order.pop_back();
      order.pop_back();
      assigned[v] = assigned[w] = false;
      image[v] = v;
      image[w] = w;
      if (found.size() >= limit) return;
    }
  }
};

}  // namespace

Graph paley(std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (!pp || q % 4 != 1)
    throw DomainError("invalid-paley-order",
                      "Paley graphs need a prime power q = 1 (mod 4), got " + std::to_string(q));
  require_order(q);
  const FiniteField f = make_field(pp.p, pp.h);
  std::vector<bool> square(q, false);
  for (std::int64_t e = 0; e < static_cast<std::int64_t>(q - 1); e += 2) square[f.exp(e).value] = true;
  return Graph::from_predicate(q, [&](Vertex x, Vertex y) {
    return square[f.sub(f.element(static_cast<std::uint32_t>(x)),
                        f.element(static_cast<std::uint32_t>(y)))
                      .value];
  });
}

std::size_t lattice_index(std::size_t n, std::size_t x, std::size_t y) {
  return (x - 1) * n + (y - 1);
}

std::size_t triangular_index(std::size_t n, std::size_t x, std::size_t y) {
  if (x > y) std::swap(x, y);
  // pairs with smaller element below x come first
  const std::size_t before = (x - 1) * n - (x - 1) * x / 2;
  return before + (y - x - 1);
}

Graph lattice(std::size_t n) {
  if (n < 3) throw DomainError("invalid-parameter", "L(n) needs n >= 3");
  require_order(n * n);
  return Graph::from_predicate(n * n, [n](Vertex u, Vertex v) {
    return u / n == v / n || u % n == v % n;
  });
}

Graph triangular(std::size_t n) {
  if (n < 5) throw DomainError("invalid-parameter", "T(n) needs n >= 5");
  require_order(n * (n - 1) / 2);
  const auto pairs = triangular_pairs(n);
  return Graph::from_predicate(pairs.size(), [&](Vertex u, Vertex v) {
    const auto [a, b] = pairs[u];
    const auto [c, d] = pairs[v];
    return a == c || a == d || b == c || b == d;
  });
}

Graph hypercube(std::size_t d) {
  if (d < 1 || d > 12) throw DomainError("invalid-parameter", "hypercube dimension must be in 1..12");
  return Graph::from_predicate(std::size_t{1} << d, [](Vertex u, Vertex v) {
    return std::popcount(u ^ v) == 1;
  });
}

Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Paley:
      return paley(checked_param(spec, 0, 5, "q"));
    case Family::Lattice:
      return lattice(checked_param(spec, 0, 3, "n"));
    case Family::Triangular:
      return triangular(checked_param(spec, 0, 5, "n"));
    case Family::LatticeComplement:
      return complement(lattice(checked_param(spec, 0, 3, "n")));
    case Family::TriangularComplement:
      return complement(triangular(checked_param(spec, 0, 5, "n")));
    case Family::HypercubeComplement:
      return complement(hypercube(checked_param(spec, 0, 3, "d")));
    case Family::TwoCliqueExtension:
      return two_clique_extension(paley(checked_param(spec, 0, 5, "q")));
    case Family::CompleteTimesMatchings: {
      const std::size_t x = checked_param(spec, 0, 2, "x");
      const std::size_t y = checked_param(spec, 1, 1, "y");
      require_order(2 * x * y);
      const Graph matching = Graph::from_predicate(2 * y, [](Vertex u, Vertex v) { return u / 2 == v / 2; });
      return lexicographic_product(complete_graph(x), matching);
    }
    case Family::ConferenceTimesCoclique: {
      const Graph p = paley(checked_param(spec, 0, 5, "q"));
      const std::size_t m = checked_param(spec, 1, 1, "m");
      require_order(p.order() * m);
      return lexicographic_product(p, Graph(m));
    }
  }
  throw DomainError("unknown-family", "unknown graph family");
}

VertexPermutation named_involution(Family family, std::size_t n, InvolutionKind which, std::size_t i) {
  auto unavailable = [&](const std::string& why) {
    return DomainError("involution-unavailable", why);
  };
  std::vector<Vertex> image;
  Graph g;
  switch (which) {
    case InvolutionKind::MainDiagonal:
    case InvolutionKind::PointReflection: {
      if (family != Family::Lattice)
        throw unavailable("main-diagonal and point reflections are defined for L(n)");
      if (which == InvolutionKind::PointReflection && n % 2 != 0)
        throw unavailable("point reflection of L(n) interchanges adjacent vertices for odd n");
      g = lattice(n);
      image.resize(n * n);
      for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y)
          image[lattice_index(n, x, y)] = which == InvolutionKind::MainDiagonal
                                              ? lattice_index(n, y, x)
                                              : lattice_index(n, n + 1 - x, n + 1 - y);
      break;
    }
    case InvolutionKind::DiagonalReflection: {
      if (family != Family::Triangular)
        throw unavailable("the diagonal reflection is defined for T(n)");
      if (n % 2 != 0) throw unavailable("T(n) has no suitable order-2 automorphism for odd n");
      g = triangular(n);
      for (const auto& [x, y] : triangular_pairs(n))
        image.push_back(triangular_index(n, n + 1 - y, n + 1 - x));
      break;
    }
    case InvolutionKind::RowPairs: {
      if (family != Family::LatticeComplement)
        throw unavailable("i-automorphisms are defined for the complement of L(n)");
      if (i < 1 || i > n / 2)
        throw unavailable("i must lie in 1.." + std::to_string(n / 2) + ", got " + std::to_string(i));
      g = complement(lattice(n));
      image.resize(n * n);
      for (std::size_t x = 1; x <= n; ++x) {
        std::size_t row = x;
        if (x <= 2 * i) row = x % 2 == 1 ? x + 1 : x - 1;
        for (std::size_t y = 1; y <= n; ++y) image[lattice_index(n, x, y)] = lattice_index(n, row, y);
      }
      break;
    }
    case InvolutionKind::OneTwo: {
      if (family != Family::TriangularComplement)
        throw unavailable("the {1,2}-automorphism is defined for the complement of T(n)");
      g = complement(triangular(n));
      auto swap12 = [](std::size_t z) { return z == 1 ? std::size_t{2} : z == 2 ? std::size_t{1} : z; };
      for (const auto& [x, y] : triangular_pairs(n))
        image.push_back(triangular_index(n, swap12(x), swap12(y)));
      break;
    }
  }
  VertexPermutation p(std::move(image));
  validate_switching(g, p);
  return p;
}

Graph dual_seidel_switch(const Graph& g, const VertexPermutation& p) {
  validate_switching(g, p);
  return Graph::from_predicate(g.order(), [&](Vertex x, Vertex y) { return g.adjacent(p(x), y); });
}

std::vector<VertexPermutation> find_switching_involutions(const Graph& g, std::size_t limit) {
  if (g.order() > 64)
    throw DomainError("graph-too-large", "involution search is limited to 64 vertices");
  InvolutionSearch search{g, refined_colours(g), {}, std::vector<bool>(g.order(), false), {}, {}, limit};
  search.image.resize(g.order());
  std::iota(search.image.begin(), search.image.end(), Vertex{0});
  search.run(0);
  return std::move(search.found);
}

std::vector<std::size_t> group_by_conjugacy(const std::vector<VertexPermutation>& involutions) {
  const std::size_t m = involutions.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<VertexPermutation, std::size_t> index;
  for (std::size_t j = 0; j < m; ++j) index.emplace(involutions[j], j);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& c : involutions) {
      if (c.size() != involutions[j].size()) continue;
      const auto conj = c.compose(involutions[j]).compose(c.inverse());
      const auto it = index.find(conj);
      if (it != index.end()) parent[find(j)] = find(it->second);
    }
  std::map<std::size_t, std::size_t> label;
  std::vector<std::size_t> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = label.emplace(find(j), label.size()).first->second;
  return out;
}

bool deza_product_criterion(const SrgParameters& srg, const DezaParameters& deza) {
  std::set<long long> values{deza.a + srg.k * deza.n, deza.b + srg.k * deza.n};
  if (srg.k < srg.n - 1) values.insert(srg.mu * deza.n);
  if (srg.k > 0) values.insert(srg.lambda * deza.n + 2 * deza.k);
  return values.size() <= 2;
}

Graph two_clique_extension(const Graph& g) { return lexicographic_product(g, complete_graph(2)); }

Graph quasi_lattice(std::size_t n, InvolutionKind which) {
  if (n == 4)
    throw DomainError("degenerate-parameters",
                      "switching L(4) gives parameters (16,6,2,2) with a = b, not strictly Deza");
  return dual_seidel_switch(lattice(n), named_involution(Family::Lattice, n, which));
}

Graph quasi_triangular(std::size_t n) {
  if (n == 6)
    throw DomainError("degenerate-parameters",
                      "switching T(6) gives parameters (15,8,4,4) with a = b, not strictly Deza");
  return dual_seidel_switch(triangular(n),
                            named_involution(Family::Triangular, n, InvolutionKind::DiagonalReflection));
}

}  // namespace deza
