#ifndef DEZA_SPECTRA_HPP
#define DEZA_SPECTRA_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "deza/analysis.hpp"
#include "deza/graph.hpp"

namespace deza {

/// Eigenvalues closer than this are merged into one multiplicity class;
/// values this close to an integer are snapped.
inline constexpr double kMergeTolerance = 1e-8;
/// Tolerance for comparing spectra computed along different routes.
inline constexpr double kSpectrumCheckTolerance = 1e-6;

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  bool is_integer = false;
};

/// Eigenvalues sorted descending, merged into multiplicities.
struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;

  std::size_t total_multiplicity() const;
  std::size_t distinct() const { return eigenvalues.size(); }
  /// Expanded list (each value repeated by multiplicity), descending.
  std::vector<double> values() const;
};

/// Sorts descending, merges within kMergeTolerance, then snaps near-integers.
Spectrum make_spectrum(std::vector<double> raw);

/// Spectrum of any real symmetric matrix expression.
template <typename Derived>
Spectrum spectrum_of(const Eigen::MatrixBase<Derived>& symmetric) {
  using Matrix = Eigen::MatrixXd;
  const Matrix m = symmetric.template cast<double>();
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return make_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

/// Adjacency spectrum of g.
Spectrum spectrum(const Graph& g);

/// Children spectra predicted from the parameters and the spectrum of the
/// parent: for each non-principal theta, A gets (k - b - theta^2)/(b - a)
/// and B gets (k - a - theta^2)/(a - b); the principal values are alpha and
/// beta. Requires a report with b > a and k in `parent`.
std::pair<Spectrum, Spectrum> children_spectra(const DezaReport& report, const Spectrum& parent);

/// True iff the multisets of squared eigenvalues agree within
/// kSpectrumCheckTolerance. Throws DomainError on differing orders.
bool switching_spectrum_check(const Graph& g, const Graph& switched);

/// Same multiset of eigenvalues (with multiplicity) within `tol`.
bool spectra_match(const Spectrum& x, const Spectrum& y, double tol = kSpectrumCheckTolerance);

}  // namespace deza

#endif  // DEZA_SPECTRA_HPP
