#ifndef DEZA_ENUMERATION_HPP
#define DEZA_ENUMERATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deza/analysis.hpp"
#include "deza/graph.hpp"

namespace deza {

/// Inverse-closed subset of Z_n \ {0}, elements sorted ascending.
struct ConnectionSet {
  std::size_t n = 0;
  std::vector<std::int64_t> elements;

  /// Set generated by the half-set encoded in `mask`: bit d-1 selects d and
  /// n - d for d in 1..floor(n/2).
  static ConnectionSet from_half_mask(std::size_t n, std::uint64_t mask);

  /// Bit s set for each element s.
  std::uint64_t bits() const;

  bool operator==(const ConnectionSet&) const = default;
};

struct CensusRecord {
  std::size_t n = 0;
  ConnectionSet connection;  // multiplier-canonical, least in its class
  GraphKind kind = GraphKind::Other;
  std::size_t k = 0;
  std::size_t b = 0;
  std::size_t a = 0;
  bool strictly_deza = false;
  std::string graph6;
  std::size_t class_id = 0;  // position in the census

  bool operator==(const CensusRecord&) const = default;
};

inline constexpr std::size_t kMinCirculantOrder = 4;
inline constexpr std::size_t kMaxCirculantOrder = 40;

/// One record per isomorphism class of connected circulants on n vertices
/// with exactly two common-neighbour values (strictly Deza only when
/// `strict_only`). Output is sorted by (k, b, a, connection set) and does not
/// depend on `jobs`. Throws DomainError unless 4 <= n <= 40.
std::vector<CensusRecord> enumerate_circulants(std::size_t n, bool strict_only, unsigned jobs = 1);

/// Multiplier-canonical image of S: the least u*S over units u, comparing
/// sorted element lists lexicographically.
ConnectionSet multiplier_canonical(const ConnectionSet& s);

struct Verify2pResult {
  std::uint64_t p = 0;
  bool verified = false;
  std::size_t classes = 0;
  std::optional<std::array<std::size_t, 4>> params;  // (n, k, b, a) of the single class
  std::vector<CensusRecord> census;
};

/// Strictly Deza circulants on 2p vertices are P(p)[K2] for p = 1 (mod 4)
/// and do not exist for p = 3 (mod 4). Requires an odd prime p with 2p <= 40.
Verify2pResult verify_2p(std::uint64_t p, unsigned jobs = 1);

/// Multiplicity of each group element (by index) in the difference multiset
/// S - S. Entry 0 (the identity) equals |S|.
std::vector<std::size_t> difference_multiplicities(const std::vector<std::size_t>& group_orders,
                                                   std::span<const GroupElement> connection);

/// Whether the multiplicities over non-identity elements take at most two
/// values; unrealised differences count as the value 0.
bool cayley_deza_check(const std::vector<std::size_t>& group_orders,
                       std::span<const GroupElement> connection);

/// Census directory: $DEZA_RESULTS_DIR when set, else "results".
std::filesystem::path results_dir();

/// results_dir()/census-n{N}.jsonl for strict runs, census-n{N}-all.jsonl
/// otherwise.
std::filesystem::path census_path(std::size_t n, bool strict_only);

enum class PinStatus { Written, Matched };

/// Writes the census when no file exists; otherwise compares line by line
/// and throws DomainError("census-divergence") on any difference.
PinStatus pin_census(const std::vector<CensusRecord>& census, std::size_t n, bool strict_only);

}  // namespace deza

#endif  // DEZA_ENUMERATION_HPP
