#include "deza/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "deza/constructions.hpp"
#include "deza/error.hpp"
#include "deza/finite_field.hpp"
#include "deza/graph_io.hpp"
#include "deza/serialization.hpp"

namespace deza {

namespace {

// For sets of equal size, sorted-list lexicographic order is decided by the
// smallest element in the symmetric difference.
bool set_less(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t diff = x ^ y;
  return diff != 0 && (x & (diff & -diff)) != 0;
}

std::uint64_t multiply_bits(std::uint64_t bits, std::size_t n, std::size_t u) {
  std::uint64_t out = 0;
  while (bits) {
    const auto s = static_cast<std::size_t>(std::countr_zero(bits));
    bits &= bits - 1;
    out |= std::uint64_t{1} << (s * u % n);
  }
  return out;
}

std::vector<std::size_t> units(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t u = 2; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  return out;
}

ConnectionSet from_bits(std::size_t n, std::uint64_t bits) {
  ConnectionSet s{n, {}};
  for (std::size_t d = 1; d < n; ++d)
    if ((bits >> d) & 1u) s.elements.push_back(static_cast<std::int64_t>(d));
  return s;
}

struct Candidate {
  ConnectionSet connection;
  Graph graph;
  DezaReport report;
};

// Cheap test on the common-neighbour counts of pairs (0, d), which determine
// every pair of a circulant.
bool row_zero_filter(std::size_t n, std::uint64_t s, bool strict_only) {
  const std::uint64_t full = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  std::set<int> values, adjacent_values, other_values;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t shifted = ((s << d) | (s >> (n - d))) & full;
    const int c = std::popcount(s & shifted);
    values.insert(c);
    if ((s >> d) & 1u) {
      adjacent_values.insert(c);
    } else {
      other_values.insert(c);
      if (strict_only && c == 0) return false;  // diameter above 2
    }
    if (values.size() > 2) return false;
  }
  if (values.size() != 2) return false;
  if (strict_only && adjacent_values.size() == 1 && other_values.size() == 1) return false;
  return true;
}

void search_range(std::size_t n, bool strict_only, unsigned worker, unsigned jobs,
                  const std::vector<std::size_t>& mults, std::vector<Candidate>& out) {
  const std::uint64_t end = std::uint64_t{1} << (n / 2);
  for (std::uint64_t mask = 1 + worker; mask < end; mask += jobs) {
    const ConnectionSet cs = ConnectionSet::from_half_mask(n, mask);
    std::size_t g = n;
    for (auto s : cs.elements) g = std::gcd(g, static_cast<std::size_t>(s));
    if (g != 1) continue;
    const std::uint64_t bits = cs.bits();
    bool canonical = true;
    for (std::size_t u : mults)
      if (set_less(multiply_bits(bits, n, u), bits)) {
        canonical = false;
        break;
      }
    if (!canonical || !row_zero_filter(n, bits, strict_only)) continue;
    Graph graph = circulant(n, cs.elements);
    DezaReport report = classify(graph);
    if (strict_only ? !report.strictly_deza : !report.has_two_values()) continue;
    out.push_back({cs, std::move(graph), std::move(report)});
  }
}

}  // namespace

ConnectionSet ConnectionSet::from_half_mask(std::size_t n, std::uint64_t mask) {
  std::uint64_t bits = 0;
  for (std::size_t d = 1; d <= n / 2; ++d)
    if ((mask >> (d - 1)) & 1u) bits |= (std::uint64_t{1} << d) | (std::uint64_t{1} << (n - d));
  return from_bits(n, bits);
}

std::uint64_t ConnectionSet::bits() const {
  std::uint64_t out = 0;
  for (auto s : elements) out |= std::uint64_t{1} << s;
  return out;
}

ConnectionSet multiplier_canonical(const ConnectionSet& s) {
  if (s.n > 64) throw DomainError("order-out-of-range", "multiplier canonical form needs n <= 64");
  std::uint64_t best = s.bits();
  for (std::size_t u : units(s.n)) {
    const std::uint64_t image = multiply_bits(s.bits(), s.n, u);
    if (set_less(image, best)) best = image;
  }
  return from_bits(s.n, best);
}

std::vector<CensusRecord> enumerate_circulants(std::size_t n, bool strict_only, unsigned jobs) {
  if (n < kMinCirculantOrder || n > kMaxCirculantOrder)
    throw DomainError("order-out-of-range", "circulant enumeration supports 4 <= n <= 40, got " +
                                                std::to_string(n));
  jobs = std::max(1u, jobs);
  const auto mults = units(n);
  std::vector<std::vector<Candidate>> found(jobs);
  if (jobs == 1) {
    search_range(n, strict_only, 0, 1, mults, found[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back(search_range, n, strict_only, w, jobs, std::cref(mults), std::ref(found[w]));
    for (auto& t : workers) t.join();
  }

  std::vector<Candidate> all;
  for (auto& part : found)
    for (auto& c : part) all.push_back(std::move(c));
  auto key = [](const Candidate& c) {
    return std::tie(*c.report.k, *c.report.b, *c.report.a, c.connection.elements);
  };
  std::sort(all.begin(), all.end(), [&](const Candidate& x, const Candidate& y) { return key(x) < key(y); });

  std::vector<const Candidate*> reps;
  for (const auto& c : all) {
    bool seen = false;
    for (const Candidate* r : reps)
      if (*r->report.k == *c.report.k && *r->report.b == *c.report.b && *r->report.a == *c.report.a &&
          is_isomorphic(r->graph, c.graph)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(&c);
  }

  std::vector<CensusRecord> census;
  for (const Candidate* r : reps) {
    CensusRecord rec;
    rec.n = n;
    rec.connection = r->connection;
    rec.kind = r->report.kind;
    rec.k = *r->report.k;
    rec.b = *r->report.b;
    rec.a = *r->report.a;
    rec.strictly_deza = r->report.strictly_deza;
    rec.graph6 = to_graph6(r->graph);
    rec.class_id = census.size();
    census.push_back(std::move(rec));
  }
  return census;
}

Verify2pResult verify_2p(std::uint64_t p, unsigned jobs) {
  if (p < 3 || !is_prime(p) || 2 * p > kMaxCirculantOrder)
    throw DomainError("invalid-prime", "verify-2p needs an odd prime p with 2p <= 40, got " + std::to_string(p));
  Verify2pResult out;
  out.p = p;
  out.census = enumerate_circulants(2 * p, true, jobs);
  out.classes = out.census.size();
  if (p % 4 == 3) {
    out.verified = out.census.empty();
    return out;
  }
  if (out.classes != 1) return out;
  const CensusRecord& rec = out.census.front();
  out.params = std::array<std::size_t, 4>{rec.n, rec.k, rec.b, rec.a};
  const bool params_ok = rec.k == p && rec.b == p - 1 && rec.a == (p - 1) / 2;
  out.verified = params_ok && is_isomorphic(from_graph6(rec.graph6), two_clique_extension(paley(p)));
  return out;
}

std::vector<std::size_t> difference_multiplicities(const std::vector<std::size_t>& group_orders,
                                                   std::span<const GroupElement> connection) {
  const AbelianGroup group(group_orders);
  std::set<std::size_t> idx;
  for (const auto& x : connection) idx.insert(group.index(x));
  if (idx.count(0))
    throw DomainError("identity-in-connection", "connection set contains the identity");
  for (std::size_t x : idx)
    if (!idx.count(group.negate(x)))
      throw DomainError("not-inverse-closed", "connection set is not closed under inverses");
  std::vector<std::size_t> mult(group.order(), 0);
  for (std::size_t x : idx)
    for (std::size_t y : idx) ++mult[group.difference(x, y)];
  return mult;
}

bool cayley_deza_check(const std::vector<std::size_t>& group_orders,
                       std::span<const GroupElement> connection) {
  const auto mult = difference_multiplicities(group_orders, connection);
  const std::set<std::size_t> values(mult.begin() + 1, mult.end());
  return values.size() <= 2;
}

std::filesystem::path results_dir() {
  if (const char* env = std::getenv("DEZA_RESULTS_DIR"); env && *env) return env;
  return "results";
}

std::filesystem::path census_path(std::size_t n, bool strict_only) {
  return results_dir() / ("census-n" + std::to_string(n) + (strict_only ? "" : "-all") + ".jsonl");
}

PinStatus pin_census(const std::vector<CensusRecord>& census, std::size_t n, bool strict_only) {
  const auto path = census_path(n, strict_only);
  std::vector<std::string> lines;
  for (const auto& rec : census) lines.push_back(Json(rec).dump());

  if (!std::filesystem::exists(path)) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw DomainError("unwritable-results", "cannot write " + path.string());
    for (const auto& line : lines) out << line << '\n';
    return PinStatus::Written;
  }

  std::ifstream in(path);
  if (!in) throw DomainError("unreadable-results", "cannot read " + path.string());
  std::vector<std::string> stored;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) stored.push_back(line);
  if (stored.size() != lines.size())
    throw DomainError("census-divergence", path.string() + " holds " + std::to_string(stored.size()) +
                                               " records, this run found " + std::to_string(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Json parsed;
    try {
      parsed = Json::parse(stored[i]);
    } catch (const Json::parse_error& e) {
      throw DomainError("census-divergence", path.string() + " line " + std::to_string(i + 1) +
                                                 " is not JSON: " + e.what());
    }
    if (census_record_from_json(parsed) != census[i])
      throw DomainError("census-divergence", path.string() + " differs at record " + std::to_string(i));
  }
  return PinStatus::Matched;
}

}  // namespace deza
