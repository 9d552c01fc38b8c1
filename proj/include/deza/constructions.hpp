#ifndef DEZA_CONSTRUCTIONS_HPP
#define DEZA_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

enum class Family {
  Paley,                  // P(q)
  Lattice,                // L(n)
  Triangular,             // T(n)
  LatticeComplement,      // complement of L(n)
  TriangularComplement,   // complement of T(n)
  HypercubeComplement,    // complement of H(d,2)
  TwoCliqueExtension,     // P(q)[K2]
  CompleteTimesMatchings, // K_x[yK2]
  ConferenceTimesCoclique // P(q)[coclique of size m]
};

struct FamilySpec {
  Family family;
  std::vector<long long> params;
};

/// Builds the named graph. Vertex orders: lattice row-major over (x, y);
/// triangular 2-subsets in lexicographic order; hypercube binary counting;
/// Paley by field-element encoding. Throws DomainError on invalid params.
Graph build(const FamilySpec& spec);

Graph paley(std::uint64_t q);
Graph lattice(std::size_t n);
Graph triangular(std::size_t n);
Graph hypercube(std::size_t d);

/// Vertex index of (x, y) in L(n), 1-based coordinates.
std::size_t lattice_index(std::size_t n, std::size_t x, std::size_t y);
/// Vertex index of {x, y} in T(n), 1-based elements, x != y.
std::size_t triangular_index(std::size_t n, std::size_t x, std::size_t y);

enum class InvolutionKind {
  MainDiagonal,        // L(n): (x,y) -> (y,x)
  PointReflection,     // L(n), n even: (x,y) -> (n+1-x, n+1-y)
  DiagonalReflection,  // T(n), n even: {x,y} -> {n+1-y, n+1-x}
  RowPairs,            // complement of L(n): swap rows 2j-1, 2j for j <= i
  OneTwo               // complement of T(n): {1,z} <-> {2,z}
};

/// Named order-2 automorphism moving only non-adjacent pairs, validated
/// before return. `i` is used by RowPairs (1 <= i <= n/2). Throws
/// DomainError when the involution does not exist for this family/parity.
VertexPermutation named_involution(Family family, std::size_t n, InvolutionKind which, std::size_t i = 1);

/// Dual Seidel switching: row x of the result is row p(x) of g. p must be an
/// automorphism of order <= 2 whose 2-cycles are non-adjacent pairs; each
/// violation raises a distinct DomainError code (not-automorphism,
/// not-involution, moves-adjacent-pair).
Graph dual_seidel_switch(const Graph& g, const VertexPermutation& p);

/// Every automorphism of order <= 2 that moves only non-adjacent pairs,
/// identity included, in lexicographic order of images. Requires n <= 64.
/// Stops after `limit` results.
std::vector<VertexPermutation> find_switching_involutions(
    const Graph& g, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Partitions `involutions` into classes closed under conjugation by members
/// of the list itself; returns class indices in input order.
std::vector<std::size_t> group_by_conjugacy(const std::vector<VertexPermutation>& involutions);

struct SrgParameters {
  long long n, k, lambda, mu;
};
struct DezaParameters {
  long long n, k, b, a;
};

/// Whether srg[deza] is Deza: |{a + kn', b + kn', mu n', lambda n' + 2k'}| <= 2.
/// For a complete outer factor (k = n - 1) no pair realises mu n', so that
/// term is left out.
bool deza_product_criterion(const SrgParameters& srg, const DezaParameters& deza);

/// g[K2].
Graph two_clique_extension(const Graph& g);

/// Quasi-lattice graph: L(n) switched by the given involution. Rejects L(4),
/// whose parameters (16,6,2,2) have a = b.
Graph quasi_lattice(std::size_t n, InvolutionKind which);
/// Quasi-triangular graph: T(n) switched by the diagonal reflection. Rejects
/// T(6), whose parameters (15,8,4,4) have a = b.
Graph quasi_triangular(std::size_t n);

}  // namespace deza

#endif  // DEZA_CONSTRUCTIONS_HPP
