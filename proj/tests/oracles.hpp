#ifndef DEZA_TESTS_ORACLES_HPP
#define DEZA_TESTS_ORACLES_HPP

// Slow reference implementations that share no code with the library
// routines they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "deza/finite_field.hpp"
#include "deza/graph.hpp"

namespace deza::oracle {

inline std::size_t common(const Graph& g, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (Vertex w = 0; w < g.order(); ++w) c += g.adjacent(u, w) && g.adjacent(v, w);
  return c;
}

struct PairCensus {
  std::set<std::size_t> values;
  std::set<std::size_t> adjacent_values;
  std::set<std::size_t> non_adjacent_values;
};

inline PairCensus pair_census(const Graph& g) {
  PairCensus c;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const std::size_t x = common(g, u, v);
      c.values.insert(x);
      (g.adjacent(u, v) ? c.adjacent_values : c.non_adjacent_values).insert(x);
    }
  return c;
}

/// Parameters (n, k, b, a) when g is regular with exactly two pair values.
struct NaiveDeza {
  bool two_values = false;
  bool srg = false;
  std::size_t k = 0, b = 0, a = 0;
};

inline NaiveDeza naive_deza(const Graph& g) {
  NaiveDeza out;
  std::set<std::size_t> degrees;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t d = 0;
    for (Vertex w = 0; w < g.order(); ++w) d += g.adjacent(v, w);
    degrees.insert(d);
  }
  if (degrees.size() != 1) return out;
  out.k = *degrees.begin();
  const PairCensus c = pair_census(g);
  if (c.values.size() != 2) return out;
  out.two_values = true;
  out.a = *c.values.begin();
  out.b = *c.values.rbegin();
  out.srg = c.adjacent_values.size() == 1 && c.non_adjacent_values.size() == 1;
  return out;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-22) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

/// Relation index 1..3 of a non-zero difference, from its discrete log.
inline int relation_of(const FiniteField& f, FieldElement d) {
  const int r = static_cast<int>(f.log(d) % 3);
  return r == 0 ? 3 : r;
}

/// p_ij^k counted over every pair in R_k; returns -1 when the count is not
/// constant across pairs.
inline long long intersection_all_pairs(const FiniteField& f, int i, int j, int k) {
  long long value = -1;
  for (std::uint32_t x = 0; x < f.order(); ++x)
    for (std::uint32_t y = 0; y < f.order(); ++y) {
      if (x == y || relation_of(f, f.sub(f.element(x), f.element(y))) != k) continue;
      long long c = 0;
      for (std::uint32_t z = 0; z < f.order(); ++z) {
        if (z == x || z == y) continue;
        c += relation_of(f, f.sub(f.element(x), f.element(z))) == i &&
             relation_of(f, f.sub(f.element(z), f.element(y))) == j;
      }
      if (value == -1) value = c;
      if (value != c) return -1;
    }
  return value;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline VertexPermutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> image(n);
  for (Vertex v = 0; v < n; ++v) image[v] = v;
  std::shuffle(image.begin(), image.end(), rng);
  return VertexPermutation(image);
}

}  // namespace deza::oracle

#endif  // DEZA_TESTS_ORACLES_HPP
