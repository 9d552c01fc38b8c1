#include <random>

#include <gtest/gtest.h>

#include "deza/analysis.hpp"
#include "deza/constructions.hpp"
#include "deza/error.hpp"
#include "deza/spectra.hpp"
#include "oracles.hpp"

namespace deza {
namespace {

Graph k_3x2() { return complement(lexicographic_product(Graph(3), complete_graph(2))); }

// Corpus of regular graphs with two common-neighbour values.
std::vector<Graph> deza_corpus() {
  return {two_clique_extension(paley(5)),
          two_clique_extension(paley(13)),
          complement(hypercube(3)),
          complement(hypercube(4)),
          quasi_lattice(5, InvolutionKind::MainDiagonal),
          quasi_lattice(6, InvolutionKind::PointReflection),
          quasi_triangular(8),
          build({Family::CompleteTimesMatchings, {3, 2}}),
          build({Family::ConferenceTimesCoclique, {5, 3}}),
          cycle_graph(7),
          paley(13),
          lattice(5),
          k_3x2()};
}

TEST(Classify, PaleyIsStronglyRegular) {
  const DezaReport r = classify(paley(13));
  EXPECT_EQ(r.kind, GraphKind::StronglyRegular);
  EXPECT_EQ(r.k, 6u);
  EXPECT_EQ(r.lambda, 2u);
  EXPECT_EQ(r.mu, 3u);
  EXPECT_FALSE(r.strictly_deza);
}

TEST(Classify, TwoCliqueExtensionOfP5) {
  const DezaReport r = classify(two_clique_extension(paley(5)));
  EXPECT_EQ(r.kind, GraphKind::Deza);
  EXPECT_EQ(r.n, 10u);
  EXPECT_EQ(r.k, 5u);
  EXPECT_EQ(r.b, 4u);
  EXPECT_EQ(r.a, 2u);
  EXPECT_TRUE(r.strictly_deza);
  EXPECT_TRUE(r.coedge_regular);
}

TEST(Classify, SevenCycleHasDiameterThree) {
  const DezaReport r = classify(cycle_graph(7));
  EXPECT_EQ(r.kind, GraphKind::Deza);
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.b, 1u);
  EXPECT_EQ(r.a, 0u);
  EXPECT_EQ(r.diameter, 3u);
  EXPECT_FALSE(r.strictly_deza);
}

TEST(Classify, DegenerateKinds) {
  EXPECT_EQ(classify(complete_graph(4)).kind, GraphKind::Complete);
  EXPECT_EQ(classify(Graph(4)).kind, GraphKind::Empty);
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_EQ(classify(Graph::from_edges(3, path)).kind, GraphKind::NotRegular);
  EXPECT_EQ(classify(cycle_graph(9)).kind, GraphKind::Deza);  // values {0, 1}, diameter 4
  EXPECT_EQ(classify(build({Family::ConferenceTimesCoclique, {5, 2}})).kind, GraphKind::Other);
  EXPECT_THROW(classify(Graph(1)), DomainError);
  // A union of cliques is a disconnected strongly regular graph.
  const DezaReport two_k3 = classify(lexicographic_product(Graph(2), complete_graph(3)));
  EXPECT_EQ(two_k3.kind, GraphKind::StronglyRegular);
  EXPECT_EQ(two_k3.lambda, 1u);
  EXPECT_EQ(two_k3.mu, 0u);
  EXPECT_EQ(two_k3.diameter, std::nullopt);
  const DezaReport l4 = classify(lattice(4));
  EXPECT_EQ(l4.kind, GraphKind::StronglyRegular);
  EXPECT_EQ(l4.lambda, l4.mu);
}

TEST(Classify, WitnessesRealiseValues) {
  for (const Graph& g : deza_corpus()) {
    const DezaReport r = classify(g);
    for (const Witness& w : r.witnesses) EXPECT_EQ(oracle::common(g, w.u, w.v), w.value);
    const auto census = oracle::pair_census(g);
    const auto values = r.values();
    EXPECT_EQ(std::set<std::size_t>(values.begin(), values.end()), census.values);
  }
}

TEST(Classify, AgreesWithNaiveCensusOnRandomRegularish) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const std::vector<std::int64_t> all = [&] {
      std::vector<std::int64_t> s;
      for (std::size_t d = 1; d <= n / 2; ++d)
        if (rng() & 1) {
          s.push_back(static_cast<std::int64_t>(d));
          if (2 * d != n) s.push_back(static_cast<std::int64_t>(n - d));
        }
      return s;
    }();
    const Graph g = circulant(n, all);
    const DezaReport r = classify(g);
    const auto naive = oracle::naive_deza(g);
    EXPECT_EQ(r.has_two_values(), naive.two_values);
    if (naive.two_values) {
      EXPECT_EQ(r.b, naive.b);
      EXPECT_EQ(r.a, naive.a);
      EXPECT_EQ(r.kind == GraphKind::StronglyRegular, naive.srg);
    }
  }
}

TEST(Classify, InvariantUnderRelabeling) {
  std::mt19937_64 rng(43);
  for (const Graph& g : deza_corpus()) {
    const DezaReport r = classify(g);
    const DezaReport s = classify(relabel(g, oracle::random_permutation(g.order(), rng)));
    EXPECT_EQ(r.kind, s.kind);
    EXPECT_EQ(r.k, s.k);
    EXPECT_EQ(r.b, s.b);
    EXPECT_EQ(r.a, s.a);
    EXPECT_EQ(r.strictly_deza, s.strictly_deza);
  }
}

TEST(AlphaBeta, Examples) {
  const AlphaBeta x = alpha_beta(10, 5, 4, 2);
  EXPECT_EQ(x.alpha, 8u);
  EXPECT_EQ(x.beta, 1u);
  const AlphaBeta y = alpha_beta(8, 4, 2, 0);
  EXPECT_EQ(y.alpha, 1u);
  EXPECT_EQ(y.beta, 6u);
  try {
    alpha_beta(10, 5, 2, 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "degenerate-parameters");
  }
  try {
    alpha_beta(10, 5, 4, 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "inconsistent-parameters");
  }
}

TEST(AlphaBeta, CountsMatchDirectCensus) {
  for (const Graph& g : deza_corpus()) {
    const DezaReport r = classify(g);
    if (!r.has_two_values()) continue;
    EXPECT_EQ(*r.alpha + *r.beta, r.n - 1);
    EXPECT_EQ(*r.k * (*r.k - 1), *r.a * *r.alpha + *r.b * *r.beta);
    for (Vertex u = 0; u < g.order(); ++u) {
      std::size_t b_count = 0;
      for (Vertex v = 0; v < g.order(); ++v)
        if (v != u && oracle::common(g, u, v) == *r.b) ++b_count;
      EXPECT_EQ(b_count, *r.beta);
    }
  }
}

TEST(Children, HypercubeComplement) {
  const Graph g = complement(hypercube(3));
  const DezaChildren c = children(g, classify(g));
  EXPECT_TRUE(is_isomorphic(c.child_a, lexicographic_product(Graph(4), complete_graph(2))));
  EXPECT_TRUE(is_isomorphic(c.child_b, complement(lexicographic_product(Graph(4), complete_graph(2)))));
  EXPECT_EQ(c.child_a.valency(), 1u);
  EXPECT_EQ(c.child_b.valency(), 6u);
}

TEST(Children, StronglyRegularChildIsTheGraph) {
  const Graph g = paley(13);
  const DezaChildren c = children(g, classify(g));
  // lambda = 2 < mu = 3, so adjacent pairs are the a-pairs.
  EXPECT_EQ(c.child_a, g);
  EXPECT_EQ(c.child_b, complement(g));
}

TEST(Children, MatchingForTwoCliqueExtension) {
  const Graph g = two_clique_extension(paley(5));
  const DezaChildren c = children(g, classify(g));
  EXPECT_EQ(c.child_b.valency(), 1u);
  for (Vertex v = 0; v < 10; v += 2) EXPECT_TRUE(c.child_b.adjacent(v, v + 1));
}

TEST(Children, MatrixIdentitiesOnCorpus) {
  for (const Graph& g : deza_corpus()) {
    const DezaReport r = classify(g);
    if (!r.has_two_values()) continue;
    const DezaChildren c = children(g, r);
    const Eigen::MatrixXi m = adjacency_matrix(g);
    const Eigen::MatrixXi a = adjacency_matrix(c.child_a);
    const Eigen::MatrixXi b = adjacency_matrix(c.child_b);
    const auto n = static_cast<Eigen::Index>(g.order());
    const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(n, n);
    EXPECT_EQ(a + b + id, Eigen::MatrixXi::Ones(n, n));
    EXPECT_EQ(m * m, static_cast<int>(*r.a) * a + static_cast<int>(*r.b) * b + static_cast<int>(*r.k) * id);
  }
}

TEST(Children, RejectsSingleValue) {
  const Graph g = lattice(4);
  EXPECT_THROW(children(g, classify(g)), DomainError);
}

TEST(ComplementCriterion, AgreesWithDirectClassification) {
  std::size_t checked = 0;
  for (const Graph& g : deza_corpus()) {
    const DezaReport r = classify(g);
    if (r.kind != GraphKind::Deza) continue;
    const ComplementCriterion c = complement_is_deza(g, r);
    const DezaReport rc = classify(complement(g));
    EXPECT_EQ(c.complement_is_deza, rc.has_two_values()) << r.n;
    if (*r.b - *r.a != 2) EXPECT_FALSE(c.complement_is_deza);
    ++checked;
  }
  EXPECT_GE(checked, 8u);
  EXPECT_THROW(complement_is_deza(paley(13), classify(paley(13))), DomainError);
}

TEST(DivisibleDesign, Examples) {
  const Graph g = two_clique_extension(paley(5));
  const auto d = is_divisible_design(g, classify(g));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].class_size, 2u);
  EXPECT_EQ(d[0].classes, 5u);
  EXPECT_EQ(d[0].lambda1, 4u);
  EXPECT_EQ(d[0].lambda2, 2u);

  EXPECT_TRUE(is_divisible_design(cycle_graph(7), classify(cycle_graph(7))).empty());

  const Graph k = k_3x2();
  const auto dk = is_divisible_design(k, classify(k));
  ASSERT_FALSE(dk.empty());
  EXPECT_EQ(dk[0].class_size, 2u);
}

TEST(DivisibleDesign, AtMostFiveEigenvalues) {
  for (const Graph& g : deza_corpus()) {
    const DezaReport r = classify(g);
    if (!r.has_two_values() || is_divisible_design(g, r).empty()) continue;
    EXPECT_LE(spectrum(g).distinct(), 5u);
  }
}

TEST(Properties, CompleteTimesMatchingsIsCoedgeRegular) {
  for (long long x : {2, 3, 4})
    for (long long y : {2, 3}) {
      const DezaReport r = classify(build({Family::CompleteTimesMatchings, {x, y}}));
      EXPECT_EQ(r.kind, GraphKind::Deza);
      EXPECT_TRUE(r.strictly_deza);
      EXPECT_TRUE(r.coedge_regular);
      EXPECT_FALSE(r.edge_regular);
      EXPECT_EQ(r.n, static_cast<std::size_t>(2 * x * y));
      EXPECT_EQ(r.k, static_cast<std::size_t>(1 + 2 * y * (x - 1)));
      EXPECT_EQ(r.b, static_cast<std::size_t>(2 * y * (x - 1)));
      EXPECT_EQ(r.a, static_cast<std::size_t>(2 * y * (x - 2) + 2));
    }
}

TEST(Properties, CompleteTimesSingleEdgeIsComplete) {
  // yK2 with y = 1 is K2, so K_x[K2] = K_2x.
  for (long long x : {2, 3, 4})
    EXPECT_EQ(classify(build({Family::CompleteTimesMatchings, {x, 1}})).kind, GraphKind::Complete);
}

TEST(Properties, EdgeRegularProductWithKEqualB) {
  const Graph t6 = triangular(6);  // SRG(15, 8, 4, 4)
  for (std::size_t m : {2, 3}) {
    const DezaReport r = classify(lexicographic_product(t6, Graph(m)));
    EXPECT_EQ(r.kind, GraphKind::Deza);
    EXPECT_TRUE(r.strictly_deza);
    EXPECT_TRUE(r.edge_regular);
    EXPECT_EQ(r.n, 15 * m);
    EXPECT_EQ(r.k, 8 * m);
    EXPECT_EQ(r.b, 8 * m);
    EXPECT_EQ(r.a, 4 * m);
    EXPECT_EQ(r.k, r.b);
  }
}

}  // namespace
}  // namespace deza
