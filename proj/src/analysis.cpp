#include "deza/analysis.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "deza/error.hpp"

namespace deza {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::NotRegular: return "NotRegular";
    case GraphKind::Complete: return "Complete";
    case GraphKind::Empty: return "Empty";
    case GraphKind::StronglyRegular: return "StronglyRegular";
    case GraphKind::Deza: return "Deza";
    case GraphKind::Other: return "Other";
  }
  return "Other";
}

std::vector<std::size_t> DezaReport::values() const {
  std::vector<std::size_t> out;
  for (const auto& w : witnesses) out.push_back(w.value);
  return out;
}

namespace {

struct ValueCensus {
  std::size_t adjacent = 0;
  std::size_t non_adjacent = 0;
  Witness witness;
};

std::string params(long long n, long long k, long long b, long long a) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(b) + "," +
         std::to_string(a) + ")";
}

}  // namespace

DezaReport classify(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw DomainError("too-small", "classification needs at least 2 vertices");

  std::map<std::size_t, ValueCensus> census;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = g.common_count(u, v);
      auto [it, inserted] = census.try_emplace(c);
      if (inserted) it->second.witness = {c, u, v};
      (g.adjacent(u, v) ? it->second.adjacent : it->second.non_adjacent)++;
    }
  }

  DezaReport r;
  r.n = n;
  r.k = g.valency();
  r.diameter = diameter(g);
  for (const auto& [value, c] : census) r.witnesses.push_back(c.witness);

  if (!r.k) {
    r.kind = GraphKind::NotRegular;
    return r;
  }
  const std::size_t k = *r.k;
  if (k == n - 1) {
    r.kind = GraphKind::Complete;
    r.edge_regular = true;
    r.lambda = n - 2;
    return r;
  }
  if (k == 0) {
    r.kind = GraphKind::Empty;
    r.coedge_regular = true;
    r.mu = 0;
    return r;
  }

  std::vector<std::size_t> adj_values, non_adj_values;
  for (const auto& [value, c] : census) {
    if (c.adjacent) adj_values.push_back(value);
    if (c.non_adjacent) non_adj_values.push_back(value);
  }
  if (adj_values.size() == 1) {
    r.edge_regular = true;
    r.lambda = adj_values.front();
  }
  if (non_adj_values.size() == 1) {
    r.coedge_regular = true;
    r.mu = non_adj_values.front();
  }

  if (r.edge_regular && r.coedge_regular) {
    r.kind = GraphKind::StronglyRegular;
    r.b = std::max(*r.lambda, *r.mu);
    r.a = std::min(*r.lambda, *r.mu);
  } else if (census.size() == 2) {
    r.kind = GraphKind::Deza;
    r.b = census.rbegin()->first;
    r.a = census.begin()->first;
  } else {
    r.kind = GraphKind::Other;
    return r;
  }

  if (r.has_two_values()) {
    const auto ab = alpha_beta(static_cast<long long>(n), static_cast<long long>(k),
                               static_cast<long long>(*r.b), static_cast<long long>(*r.a));
    r.alpha = ab.alpha;
    r.beta = ab.beta;
  }
  r.strictly_deza = r.kind == GraphKind::Deza && r.diameter == std::optional<std::size_t>{2};
  return r;
}

AlphaBeta alpha_beta(long long n, long long k, long long b, long long a) {
  if (b <= a)
    throw DomainError("degenerate-parameters", "alpha/beta need b > a, got " + params(n, k, b, a));
  const long long alpha_num = b * (n - 1) - k * (k - 1);
  const long long beta_num = k * (k - 1) - a * (n - 1);
  const long long d = b - a;
  if (alpha_num < 0 || beta_num < 0 || alpha_num % d != 0 || beta_num % d != 0)
    throw DomainError("inconsistent-parameters",
                      "alpha/beta are not non-negative integers for " + params(n, k, b, a));
  return {static_cast<std::size_t>(alpha_num / d), static_cast<std::size_t>(beta_num / d)};
}

DezaChildren children(const Graph& g, const DezaReport& report) {
  if (!report.has_two_values() || !report.k)
    throw DomainError("children-undefined", "Deza children need two distinct common-neighbour values");
  const std::size_t a = *report.a, b = *report.b, k = *report.k;
  const std::size_t n = g.order();

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (const auto c = g.common_count(u, v); c != a && c != b)
        throw DomainError("report-mismatch", "pair with " + std::to_string(c) + " common neighbours");

  DezaChildren out{Graph::from_predicate(n, [&](Vertex u, Vertex v) { return g.common_count(u, v) == a; }),
                   Graph::from_predicate(n, [&](Vertex u, Vertex v) { return g.common_count(u, v) == b; })};

  const Eigen::MatrixXi m = adjacency_matrix<int>(g);
  const Eigen::MatrixXi ma = adjacency_matrix<int>(out.child_a);
  const Eigen::MatrixXi mb = adjacency_matrix<int>(out.child_b);
  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(ni, ni);
  if (ma + mb + id != Eigen::MatrixXi::Ones(ni, ni))
    throw DomainError("children-identity", "A + B + I != J");
  const Eigen::MatrixXi lhs = m * m;
  const Eigen::MatrixXi rhs = static_cast<int>(a) * ma + static_cast<int>(b) * mb + static_cast<int>(k) * id;
  if (lhs != rhs) throw DomainError("children-identity", "M^2 != aA + bB + kI");
  return out;
}

ComplementCriterion complement_is_deza(const Graph& g, const DezaReport& report) {
  if (report.kind != GraphKind::Deza)
    throw DomainError("not-deza", "complement criterion applies to Deza graphs that are not strongly regular");
  const std::size_t a = *report.a, b = *report.b;
  ComplementCriterion out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool adj = g.adjacent(u, v);
      const bool is_b = g.common_count(u, v) == b;
      out.situations[(adj ? 2 : 0) + (is_b ? 1 : 0)] = true;
    }
  }
  out.complement_is_deza = b == a + 2 && !(out.situations[0] && out.situations[3]);
  return out;
}

std::vector<DivisibleDesign> is_divisible_design(const Graph& g, const DezaReport& report) {
  if (!report.has_two_values())
    throw DomainError("not-deza", "divisible design test needs two common-neighbour values");
  const std::size_t n = g.order();
  std::vector<DivisibleDesign> found;
  for (const std::size_t value : {*report.b, *report.a}) {
    const std::size_t other = value == *report.b ? *report.a : *report.b;
    std::vector<std::vector<bool>> cls(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) cls[u][v] = u == v || g.common_count(u, v) == value;

    bool ok = true;
    std::size_t size = 0;
    for (Vertex u = 0; u < n && ok; ++u) {
      const auto s = static_cast<std::size_t>(std::count(cls[u].begin(), cls[u].end(), true));
      if (u == 0) size = s;
      ok = s == size;
      for (Vertex v = 0; v < n && ok; ++v)
        if (cls[u][v]) ok = cls[v] == cls[u];
    }
    if (ok && size > 1 && n % size == 0) found.push_back({n / size, size, value, other});
  }
  return found;
}

}  // namespace deza
