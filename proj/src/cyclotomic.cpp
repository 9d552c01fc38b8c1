#include "deza/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "deza/error.hpp"

namespace deza {

namespace {

std::optional<long long> exact_sqrt(long long v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

// Relation index (1..3) of a non-zero element: log mod 3, with 0 read as 3.
int relation_of(const FiniteField& f, FieldElement x) {
  const int r = static_cast<int>(f.log(x) % 3);
  return r == 0 ? 3 : r;
}

void require_three_class(const FiniteField& field) {
  const std::uint32_t q = field.order();
  if ((q - 1) % 3 != 0)
    throw DomainError("no-3-class-scheme", "3 does not divide q - 1 for q = " + std::to_string(q));
  if (!cyclotomic_scheme_is_symmetric(q, 3))
    throw DomainError("non-symmetric-scheme", "cyclotomic scheme on GF(" + std::to_string(q) + ") is not symmetric");
}

}  // namespace

bool cyclotomic_scheme_is_symmetric(std::uint64_t q, std::uint64_t e) {
  if (e == 0 || q < 2 || (q - 1) % e != 0)
    throw DomainError("bad-class-count", "e must divide q - 1");
  return q % 2 == 0 || ((q - 1) / e) % 2 == 0;
}

std::vector<LmPair> all_lm_solutions(std::uint64_t q) {
  std::vector<LmPair> out;
  const auto four_q = static_cast<long long>(4 * q);
  for (long long m = 0; 27 * m * m <= four_q; ++m)
    if (const auto l = exact_sqrt(four_q - 27 * m * m)) out.push_back({*l, m});
  return out;
}

LmPair solve_lm(std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (!pp || q % 3 != 1)
    throw DomainError("bad-field-order", std::to_string(q) + " is not a prime power = 1 (mod 3)");
  std::vector<LmPair> sols = all_lm_solutions(q);
  if (pp.p % 3 == 1)
    std::erase_if(sols, [&](const LmPair& s) { return s.L % static_cast<long long>(pp.p) == 0; });
  if (sols.size() != 1)
    throw DomainError("lm-not-unique", std::to_string(sols.size()) + " solutions of L^2 + 27M^2 = 4*" +
                                           std::to_string(q));
  return sols.front();
}

std::array<std::array<long long, 3>, 3> expected_intersection_table(long long t, long long r, long long s,
                                                                    int k) {
  const long long u = t - r - s;
  const std::array<std::array<long long, 3>, 3> base{{{u - 1, s, r}, {s, r, u}, {r, u, s}}};
  std::array<std::array<long long, 3>, 3> out{};
  const int shift = k - 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = base[(i - shift + 3) % 3][(j - shift + 3) % 3];
  return out;
}

SchemeData scheme(const FiniteField& field) {
  require_three_class(field);
  const std::uint32_t q = field.order();
  SchemeData d;
  d.q = q;
  d.t = (q - 1) / 3;

  std::vector<int> rel(q, 0);
  for (std::uint32_t x = 1; x < q; ++x) {
    rel[x] = relation_of(field, {x});
    d.classes[rel[x] - 1].push_back({x});
  }
  for (const auto& c : d.classes)
    if (c.size() != d.t) throw DomainError("internal", "cyclotomic class of unexpected size");

  // Representative pair (alpha^k, 0) for relation k.
  for (int k = 1; k <= 3; ++k) {
    const FieldElement x = field.exp(k);
    for (std::uint32_t z = 0; z < q; ++z) {
      const FieldElement zz{z};
      if (zz == x || z == 0) continue;
      const int i = rel[field.sub(x, zz).value];
      const int j = rel[z];
      ++d.p[i - 1][j - 1][k - 1];
    }
  }

  d.s = d.intersection(1, 1, 2);
  d.r = d.intersection(1, 1, 3);
  const long long t = d.t;
  for (int k = 1; k <= 3; ++k) {
    const auto expected = expected_intersection_table(t, d.r, d.s, k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (expected[i][j] != d.p[i][j][k - 1])
          throw DomainError("intersection-pattern", "p_ij^k table deviates from the (t, r, s) pattern for q = " +
                                                        std::to_string(q));
  }
  const long long lhs = 1 + 2 * (d.r + d.s) - 3 * (d.r - d.s) * (d.r - d.s);
  const long long rhs_root = 1 + 3 * (d.r + d.s) - 2 * t;
  if (lhs != rhs_root * rhs_root)
    throw DomainError("scheme-identity", "1+2(r+s)-3(r-s)^2 != (1+3(r+s)-2t)^2 for q = " + std::to_string(q));
  d.L = 6 * t - 2 - 9 * (d.r + d.s);
  d.M = d.r - d.s;
  if (d.L * d.L + 27 * d.M * d.M != 4 * static_cast<long long>(q))
    throw DomainError("scheme-identity", "L^2 + 27M^2 != 4q for q = " + std::to_string(q));
  return d;
}

Graph fusion_graph(const FiniteField& field, const std::vector<int>& relations) {
  require_three_class(field);
  std::set<int> chosen;
  for (int r : relations) {
    if (r < 1 || r > 3) throw DomainError("bad-relation", "relation indices are 1, 2 or 3");
    chosen.insert(r);
  }
  const std::uint32_t q = field.order();
  std::vector<bool> in_set(q, false);
  for (std::uint32_t x = 1; x < q; ++x) in_set[x] = chosen.contains(relation_of(field, {x}));
  return Graph::from_predicate(q, [&](Vertex u, Vertex v) {
    return in_set[field.sub({static_cast<std::uint32_t>(u)}, {static_cast<std::uint32_t>(v)}).value];
  });
}

Graph gamma(const FiniteField& field, int i) { return fusion_graph(field, {i}); }

Graph gamma_bar(const FiniteField& field, int i) {
  if (i < 1 || i > 3) throw DomainError("bad-relation", "relation indices are 1, 2 or 3");
  std::vector<int> rest;
  for (int j = 1; j <= 3; ++j)
    if (j != i) rest.push_back(j);
  return fusion_graph(field, rest);
}

bool one_class_strict_predicate(std::uint64_t q) {
  return is_prime(q) && q >= 3 && exact_sqrt(static_cast<long long>(q) - 3).has_value();
}

bool two_class_strict_predicate(std::uint64_t q) {
  return is_prime(q) && q >= 12 && exact_sqrt(static_cast<long long>(q) - 12).has_value();
}

std::optional<long long> square_certificate(std::uint64_t q, std::uint64_t offset) {
  if (q < offset) return std::nullopt;
  const auto x = exact_sqrt(static_cast<long long>(q - offset));
  if (!x) return std::nullopt;
  if (((*x % 3) + 3) % 3 == 1) return *x;
  if (((-*x % 3) + 3) % 3 == 1) return -*x;
  return *x;  // x divisible by 3: no normalisation possible
}

FusionCheck fusion_value_check(const SchemeData& data, const std::vector<int>& relations) {
  std::set<int> chosen(relations.begin(), relations.end());
  if (chosen.empty() || chosen.size() >= 3 || *chosen.begin() < 1 || *chosen.rbegin() > 3)
    throw DomainError("bad-relation", "fusion subset must be a non-empty proper subset of {1,2,3}");
  FusionCheck out;
  for (int k = 1; k <= 3; ++k)
    for (int f : chosen)
      for (int g : chosen) out.values[k - 1] += data.intersection(f, g, k);
  std::set<long long> distinct(out.values.begin(), out.values.end());
  out.at_most_two_values = distinct.size() <= 2;
  return out;
}

}  // namespace deza
