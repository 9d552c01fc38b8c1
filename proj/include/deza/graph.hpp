#ifndef DEZA_GRAPH_HPP
#define DEZA_GRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "deza/permutation.hpp"

namespace deza {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as packed 64-bit rows, so neighbourhood intersections
/// reduce to word-wise AND + popcount. Values are immutable once built.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Duplicate pairs collapse; loops and out-of-range endpoints throw DomainError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Graph whose edges are the pairs u < v with adjacent(u, v) true.
  static Graph from_predicate(std::size_t n,
                              const std::function<bool(Vertex, Vertex)>& adjacent);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const;  // edge count

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  std::size_t degree(Vertex v) const noexcept;

  /// |N(u) ∩ N(v)|, valid for any u, v (including u == v, which gives deg).
  std::size_t common_count(Vertex u, Vertex v) const noexcept {
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Regular valency, or nullopt when degrees differ. The null graph (n = 0)
  /// has no valency.
  std::optional<std::size_t> valency() const;

  bool operator==(const Graph& other) const = default;

 private:
  const std::uint64_t* row(Vertex v) const noexcept { return bits_.data() + v * words_; }
  std::uint64_t* row(Vertex v) noexcept { return bits_.data() + v * words_; }
  void set_edge(Vertex u, Vertex v) noexcept;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Dense adjacency matrix in the requested scalar type.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? Scalar(1) : Scalar(0);
  return m;
}

/// N(u, v). Throws DomainError when u == v.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; unreachable vertices hold nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Maximum eccentricity; nullopt encodes an infinite diameter (disconnected).
std::optional<std::size_t> diameter(const Graph& g);

Graph complement(const Graph& g);

/// Lexicographic product g1[g2]: (u1,u2) ~ (v1,v2) iff u1 ~ v1, or u1 = v1
/// and u2 ~ v2. Vertex (i, j) has index i * |g2| + j.
Graph lexicographic_product(const Graph& g1, const Graph& g2);

/// Subgraph induced on `vs`, relabelled 0..|vs|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

bool is_automorphism(const Graph& g, const VertexPermutation& p);

/// Graph with vertex v relabelled as p(v).
Graph relabel(const Graph& g, const VertexPermutation& p);

/// Exact isomorphism test by colour refinement plus individualisation
/// backtracking. Returns a witness p with g2 == relabel(g1, p).
std::optional<VertexPermutation> find_isomorphism(const Graph& g1, const Graph& g2);

inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

/// Elements of Z_{o_0} x ... x Z_{o_{r-1}} as residue tuples.
using GroupElement = std::vector<std::int64_t>;

/// Mixed-radix indexing with the last factor varying fastest.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::size_t> orders);

  std::size_t order() const noexcept { return order_; }
  const std::vector<std::size_t>& factors() const noexcept { return orders_; }

  std::size_t index(const GroupElement& x) const;  // reduces residues first
  GroupElement element(std::size_t index) const;
  std::size_t difference(std::size_t x, std::size_t y) const;  // index of x - y
  std::size_t negate(std::size_t x) const;

 private:
  std::vector<std::size_t> orders_;
  std::size_t order_ = 1;
};

/// Cay(G, S) for abelian G: x ~ y iff x - y in S. S must exclude the identity
/// and be closed under negation.
Graph cayley_graph(const std::vector<std::size_t>& group_orders,
                   std::span<const GroupElement> connection);

/// Circulant Cay(Z_n, S).
Graph circulant(std::size_t n, std::span<const std::int64_t> connection);

}  // namespace deza

#endif  // DEZA_GRAPH_HPP
