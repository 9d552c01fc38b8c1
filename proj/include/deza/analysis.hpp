#ifndef DEZA_ANALYSIS_HPP
#define DEZA_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

enum class GraphKind { NotRegular, Complete, Empty, StronglyRegular, Deza, Other };

std::string_view to_string(GraphKind kind);

/// One observed value of |N(u,v)| together with a pair realising it.
struct Witness {
  std::size_t value = 0;
  Vertex u = 0;
  Vertex v = 0;
};

/// Outcome of classify().
///
/// For StronglyRegular, `lambda`/`mu` are set and (b, a) hold max/min of the
/// two, so a strongly regular graph with lambda != mu also carries alpha and
/// beta. For Deza, b > a and b/a are the two realised values.
struct DezaReport {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  GraphKind kind = GraphKind::Other;
  std::optional<std::size_t> b;
  std::optional<std::size_t> a;
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> beta;
  bool strictly_deza = false;
  bool edge_regular = false;
  bool coedge_regular = false;
  std::optional<std::size_t> diameter;  // nullopt: disconnected
  std::vector<Witness> witnesses;       // sorted by value

  /// Sorted distinct values of |N(u,v)| over unordered pairs.
  std::vector<std::size_t> values() const;

  /// Exactly two common-neighbour values (Deza in the wide sense, which
  /// includes strongly regular graphs with lambda != mu).
  bool has_two_values() const { return b && a && *b > *a; }
};

/// Pair census and classification. Requires n >= 2.
DezaReport classify(const Graph& g);

struct AlphaBeta {
  std::size_t alpha = 0;  // a-vertices per vertex
  std::size_t beta = 0;   // b-vertices per vertex
};

/// Per-vertex a-/b-vertex counts from (n, k, b, a). Throws DomainError on
/// b <= a or when the counts come out negative or fractional.
AlphaBeta alpha_beta(long long n, long long k, long long b, long long a);

struct DezaChildren {
  Graph child_a;  // pairs with a common neighbours
  Graph child_b;  // pairs with b common neighbours
};

/// Builds both children and checks A + B + I = J and M^2 = aA + bB + kI.
DezaChildren children(const Graph& g, const DezaReport& report);

/// Which of the four (adjacency x value) situations occur:
///   [0] non-adjacent with a, [1] non-adjacent with b,
///   [2] adjacent with a,     [3] adjacent with b.
struct ComplementCriterion {
  bool complement_is_deza = false;
  std::array<bool, 4> situations{};
};

/// Predicts from g alone whether complement(g) is Deza: b = a + 2 and not
/// both situations 1 and 4. Requires kind == Deza.
ComplementCriterion complement_is_deza(const Graph& g, const DezaReport& report);

struct DivisibleDesign {
  std::size_t classes = 0;     // m
  std::size_t class_size = 0;
  std::size_t lambda1 = 0;     // within a class
  std::size_t lambda2 = 0;     // across classes
};

/// Tries "same class iff |N(u,v)| = value" for value = b, then a. Returns
/// every partition that works (empty when g is not a divisible design graph).
/// Requires a report with two values.
std::vector<DivisibleDesign> is_divisible_design(const Graph& g, const DezaReport& report);

}  // namespace deza

#endif  // DEZA_ANALYSIS_HPP
