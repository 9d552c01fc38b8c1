#ifndef DEZA_CYCLOTOMIC_HPP
#define DEZA_CYCLOTOMIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "deza/finite_field.hpp"
#include "deza/graph.hpp"

namespace deza {

/// Cyclotomic scheme of class e on GF(q) is symmetric iff q or (q-1)/e is
/// even. Requires e | q - 1.
bool cyclotomic_scheme_is_symmetric(std::uint64_t q, std::uint64_t e);

/// Non-negative solution (|L|, |M|) of L^2 + 27 M^2 = 4q.
struct LmPair {
  long long L = 0;
  long long M = 0;
  bool operator==(const LmPair&) const = default;
};

/// Every (|L|, |M|) with L^2 + 27 M^2 = 4q, by exhaustive search over |M|.
std::vector<LmPair> all_lm_solutions(std::uint64_t q);

/// The solution of L^2 + 27 M^2 = 4q attached to the cyclotomic numbers of
/// order 3. When q = p^h with p = 1 (mod 3), solutions with p | L are not
/// cyclotomic and are discarded; what remains must be unique.
LmPair solve_lm(std::uint64_t q);

/// 3-class cyclotomic scheme on GF(q), q = 3t + 1. Relation R_i (i = 1,2,3)
/// holds for x - y in alpha^i <alpha^3>; R_3 is the subgroup itself.
struct SchemeData {
  std::uint32_t q = 0;
  std::uint32_t t = 0;
  /// classes[i-1] = alpha^i <alpha^3>, sorted by encoding.
  std::array<std::vector<FieldElement>, 3> classes;
  /// p[i-1][j-1][k-1] = p_ij^k.
  std::array<std::array<std::array<long long, 3>, 3>, 3> p{};
  long long r = 0;  // p_11^3
  long long s = 0;  // p_11^2
  long long L = 0;  // 6t - 2 - 9(r + s)
  long long M = 0;  // r - s

  /// 1-based access p_ij^k.
  long long intersection(int i, int j, int k) const { return p[i - 1][j - 1][k - 1]; }
};

/// Brute-force intersection numbers and parameter extraction. Throws
/// DomainError when 3 does not divide q - 1 or the scheme is not symmetric,
/// and when the table violates the (t, r, s) pattern or either identity.
SchemeData scheme(const FiniteField& field);

/// The (t, r, s) intersection table for one relation index k (1..3).
std::array<std::array<long long, 3>, 3> expected_intersection_table(long long t, long long r, long long s,
                                                                    int k);

/// Cay(GF(q)^+, union of the classes listed in `relations` (values 1..3)).
Graph fusion_graph(const FiniteField& field, const std::vector<int>& relations);

/// Graph of the single relation R_i.
Graph gamma(const FiniteField& field, int i);
/// Graph of the union of the two relations other than R_i.
Graph gamma_bar(const FiniteField& field, int i);

/// q prime and q - 3 a perfect square.
bool one_class_strict_predicate(std::uint64_t q);
/// q prime and q - 12 a perfect square.
bool two_class_strict_predicate(std::uint64_t q);

/// x with q = x^2 + offset and x = 1 (mod 3), if such an integer exists.
std::optional<long long> square_certificate(std::uint64_t q, std::uint64_t offset);

struct FusionCheck {
  bool at_most_two_values = false;
  std::array<long long, 3> values{};  // sum over f, g in F of p_fg^k, for k = 1..3
};

/// Evaluates whether sum_{f,g in F} p_fg^k takes at most two values over
/// k = 1..3. `relations` must be a non-empty proper subset of {1,2,3}.
FusionCheck fusion_value_check(const SchemeData& data, const std::vector<int>& relations);

}  // namespace deza

#endif  // DEZA_CYCLOTOMIC_HPP
