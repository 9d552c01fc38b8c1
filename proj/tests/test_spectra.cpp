#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "deza/analysis.hpp"
#include "deza/constructions.hpp"
#include "deza/error.hpp"
#include "deza/spectra.hpp"
#include "oracles.hpp"

namespace deza {
namespace {

void expect_spectrum(const Spectrum& s, const std::vector<std::pair<double, std::size_t>>& expected) {
  ASSERT_EQ(s.distinct(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s.eigenvalues[i].value, expected[i].first, 1e-9);
    EXPECT_EQ(s.eigenvalues[i].multiplicity, expected[i].second);
  }
}

TEST(Spectrum, CompleteGraph) {
  expect_spectrum(spectrum(complete_graph(4)), {{3, 1}, {-1, 3}});
  EXPECT_TRUE(spectrum(complete_graph(4)).eigenvalues[0].is_integer);
}

TEST(Spectrum, HypercubeComplement) {
  expect_spectrum(spectrum(complement(hypercube(3))), {{4, 1}, {2, 1}, {0, 3}, {-2, 3}});
}

TEST(Spectrum, FiveCycle) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const Spectrum s = spectrum(cycle_graph(5));
  expect_spectrum(s, {{2, 1}, {phi - 1, 2}, {-phi, 2}});
  EXPECT_FALSE(s.eigenvalues[1].is_integer);
}

TEST(Spectrum, AgreesWithJacobiOracle) {
  for (const Graph& g : {paley(13), quasi_lattice(5, InvolutionKind::MainDiagonal), cycle_graph(11),
                         complement(triangular(7)), two_clique_extension(paley(9))}) {
    const auto expected = oracle::jacobi_eigenvalues(adjacency_matrix<double>(g));
    auto got = spectrum(g).values();
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-6);
  }
}

TEST(Spectrum, TraceInvariants) {
  for (const Graph& g : {paley(17), lattice(6), complement(hypercube(4))}) {
    const Spectrum s = spectrum(g);
    EXPECT_EQ(s.total_multiplicity(), g.order());
    double sum = 0, squares = 0;
    for (double x : s.values()) {
      sum += x;
      squares += x * x;
    }
    EXPECT_NEAR(sum, 0, 1e-6);
    EXPECT_NEAR(squares, static_cast<double>(g.order() * *g.valency()), 1e-6);
  }
}

TEST(ChildrenSpectra, HypercubeComplement) {
  const Graph g = complement(hypercube(3));
  const DezaReport r = classify(g);
  const auto [sa, sb] = children_spectra(r, spectrum(g));
  expect_spectrum(sa, {{1, 4}, {-1, 4}});
  expect_spectrum(sb, {{6, 1}, {0, 4}, {-2, 3}});
  const DezaChildren c = children(g, r);
  EXPECT_TRUE(spectra_match(sa, spectrum(c.child_a)));
  EXPECT_TRUE(spectra_match(sb, spectrum(c.child_b)));
}

TEST(ChildrenSpectra, StronglyRegularReproducesItself) {
  const Graph g = paley(13);
  const DezaReport r = classify(g);
  const Spectrum s = spectrum(g);
  const auto [sa, sb] = children_spectra(r, s);
  EXPECT_TRUE(spectra_match(sa, s));
  EXPECT_TRUE(spectra_match(sb, spectrum(complement(g))));
}

TEST(ChildrenSpectra, MatchingOfTwoCliqueExtension) {
  const Graph g = two_clique_extension(paley(5));
  const auto [sa, sb] = children_spectra(classify(g), spectrum(g));
  expect_spectrum(sb, {{1, 5}, {-1, 5}});
}

TEST(ChildrenSpectra, FormulaMatchesDirectOnCorpus) {
  for (const Graph& g : {quasi_lattice(5, InvolutionKind::MainDiagonal), quasi_triangular(8),
                         complement(hypercube(4)), build({Family::CompleteTimesMatchings, {3, 2}}),
                         cycle_graph(7), two_clique_extension(paley(13))}) {
    const DezaReport r = classify(g);
    const auto [sa, sb] = children_spectra(r, spectrum(g));
    const DezaChildren c = children(g, r);
    EXPECT_TRUE(spectra_match(sa, spectrum(c.child_a))) << r.n;
    EXPECT_TRUE(spectra_match(sb, spectrum(c.child_b))) << r.n;
  }
}

TEST(ChildrenSpectra, Errors) {
  const Graph g = lattice(4);
  EXPECT_THROW(children_spectra(classify(g), spectrum(g)), DomainError);
}

TEST(SwitchingCheck, Examples) {
  const Graph l5 = lattice(5);
  EXPECT_TRUE(switching_spectrum_check(l5, quasi_lattice(5, InvolutionKind::MainDiagonal)));
  EXPECT_TRUE(switching_spectrum_check(l5, l5));
  EXPECT_FALSE(switching_spectrum_check(l5, complement(l5)));
  try {
    switching_spectrum_check(cycle_graph(5), cycle_graph(6));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "size-mismatch");
  }
}

TEST(Properties, StrictlyDezaHasAtLeastFourEigenvalues) {
  for (const Graph& g : {quasi_lattice(5, InvolutionKind::MainDiagonal), quasi_triangular(8),
                         complement(hypercube(3)), two_clique_extension(paley(5)),
                         build({Family::CompleteTimesMatchings, {4, 3}})}) {
    ASSERT_TRUE(classify(g).strictly_deza);
    EXPECT_GE(spectrum(g).distinct(), 4u);
  }
}

TEST(MakeSpectrum, MergesBeforeSnapping) {
  const Spectrum s = make_spectrum({2.0 + 4e-9, 2.0 - 4e-9, -1.0, 0.5});
  expect_spectrum(s, {{2, 2}, {0.5, 1}, {-1, 1}});
  EXPECT_TRUE(s.eigenvalues[0].is_integer);
  EXPECT_EQ(s.eigenvalues[0].value, 2.0);
}

}  // namespace
}  // namespace deza
