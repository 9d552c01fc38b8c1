#ifndef DEZA_FINITE_FIELD_HPP
#define DEZA_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace deza {

bool is_prime(std::uint64_t n);

/// q = p^h; p == 0 when q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t h = 0;
  explicit operator bool() const { return p != 0; }
};
PrimePower prime_power(std::uint64_t q);

/// Element of GF(p^h), encoded as its polynomial coefficients read
/// little-endian in base p (c0 + c1*p + ...). The encoding doubles as the
/// canonical vertex order for graphs over the field.
struct FieldElement {
  std::uint32_t value = 0;
  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;
};

/// GF(p^h) with the lexicographically smallest monic irreducible modulus and
/// the smallest primitive element, both under the base-p encoding.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  FiniteField(std::uint32_t p, std::uint32_t h);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return h_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Coefficients c0..c_{h-1} of the modulus x^h + c_{h-1}x^{h-1} + ... + c0.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  FieldElement primitive() const noexcept { return {exp_[1]}; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t encoded) const;

  FieldElement add(FieldElement x, FieldElement y) const noexcept;
  FieldElement sub(FieldElement x, FieldElement y) const noexcept;
  FieldElement neg(FieldElement x) const noexcept { return sub(zero(), x); }
  FieldElement mul(FieldElement x, FieldElement y) const noexcept;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::int64_t e) const;

  /// Discrete log base the primitive element; x must be non-zero.
  std::uint32_t log(FieldElement x) const;
  /// primitive^e.
  FieldElement exp(std::int64_t e) const noexcept;

 private:
  std::uint32_t p_;
  std::uint32_t h_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // size q-1
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
};

/// Throws DomainError for composite p, h = 0, or p^h above 2^16.
FiniteField make_field(std::uint32_t p, std::uint32_t h);

}  // namespace deza

#endif  // DEZA_FINITE_FIELD_HPP
