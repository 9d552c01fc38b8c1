#include "deza/spectra.hpp"

#include <algorithm>
#include <functional>

#include "deza/error.hpp"

namespace deza {

std::size_t Spectrum::total_multiplicity() const {
  std::size_t t = 0;
  for (const auto& e : eigenvalues) t += e.multiplicity;
  return t;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

Spectrum make_spectrum(std::vector<double> raw) {
  std::sort(raw.begin(), raw.end(), std::greater<>());
  Spectrum s;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i + 1;
    double sum = raw[i];
    while (j < raw.size() && raw[j - 1] - raw[j] <= kMergeTolerance) sum += raw[j++];
    Eigenvalue e{sum / static_cast<double>(j - i), j - i, false};
    const double nearest = std::round(e.value);
    if (std::abs(e.value - nearest) <= kMergeTolerance) {
      e.value = nearest == 0.0 ? 0.0 : nearest;
      e.is_integer = true;
    }
    s.eigenvalues.push_back(e);
    i = j;
  }
  return s;
}

Spectrum spectrum(const Graph& g) { return spectrum_of(adjacency_matrix<double>(g)); }

std::pair<Spectrum, Spectrum> children_spectra(const DezaReport& report, const Spectrum& parent) {
  if (!report.has_two_values() || !report.k || !report.alpha || !report.beta)
    throw DomainError("children-undefined", "children spectra need a Deza report with b > a");
  const double k = static_cast<double>(*report.k);
  const double a = static_cast<double>(*report.a);
  const double b = static_cast<double>(*report.b);

  std::vector<double> thetas = parent.values();
  const auto principal = std::find_if(thetas.begin(), thetas.end(),
                                      [k](double t) { return std::abs(t - k) <= kSpectrumCheckTolerance; });
  if (principal == thetas.end())
    throw DomainError("no-principal-eigenvalue", "valency is not an eigenvalue of the given spectrum");
  thetas.erase(principal);

  std::vector<double> ev_a{static_cast<double>(*report.alpha)};
  std::vector<double> ev_b{static_cast<double>(*report.beta)};
  for (double t : thetas) {
    ev_a.push_back((k - b - t * t) / (b - a));
    ev_b.push_back((k - a - t * t) / (a - b));
  }
  return {make_spectrum(std::move(ev_a)), make_spectrum(std::move(ev_b))};
}

bool spectra_match(const Spectrum& x, const Spectrum& y, double tol) {
  const auto vx = x.values();
  const auto vy = y.values();
  if (vx.size() != vy.size()) return false;
  for (std::size_t i = 0; i < vx.size(); ++i)
    if (std::abs(vx[i] - vy[i]) > tol) return false;
  return true;
}

bool switching_spectrum_check(const Graph& g, const Graph& switched) {
  if (g.order() != switched.order())
    throw DomainError("size-mismatch", "graphs have different orders");
  auto squares = [](const Graph& h) {
    std::vector<double> v = spectrum(h).values();
    for (double& x : v) x *= x;
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto s1 = squares(g);
  const auto s2 = squares(switched);
  for (std::size_t i = 0; i < s1.size(); ++i)
    if (std::abs(s1[i] - s2[i]) > kSpectrumCheckTolerance) return false;
  return true;
}

}  // namespace deza
