#include "deza/finite_field.hpp"

#include <string>

#include "deza/error.hpp"

namespace deza {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower prime_power(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) return {};
  return {static_cast<std::uint32_t>(p), h};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients

Poly decode(std::uint32_t x, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
  return x;
}

// Remainder of `num` modulo the monic polynomial x^deg + low(x).
Poly reduce(Poly num, const Poly& low, std::uint32_t p) {
  const std::size_t deg = low.size();
  for (std::size_t top = num.size(); top-- > deg;) {
    const std::uint32_t c = num[top];
    if (c == 0) continue;
    num[top] = 0;
    for (std::size_t i = 0; i < deg; ++i) num[top - deg + i] = (num[top - deg + i] + (p - low[i]) * c) % p;
  }
  num.resize(deg);
  return num;
}

Poly mul_mod(const Poly& x, const Poly& y, const Poly& low, std::uint32_t p) {
  Poly prod(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  return reduce(std::move(prod), low, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& low, std::uint32_t p) {
  Poly result(low.size(), 0);
  result[0] = 1 % p;
  while (e) {
    if (e & 1) result = mul_mod(result, base, low, p);
    base = mul_mod(base, base, low, p);
    e >>= 1;
  }
  return result;
}

bool is_zero(const Poly& c) {
  for (auto x : c)
    if (x) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..h/2.
bool is_irreducible(const Poly& low, std::uint32_t p) {
  const std::uint32_t h = static_cast<std::uint32_t>(low.size());
  Poly full(low);
  full.push_back(1);
  for (std::uint32_t d = 1; 2 * d <= h; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      const Poly divisor_low = decode(static_cast<std::uint32_t>(code), p, d);
      if (is_zero(reduce(full, divisor_low, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t h) : p_(p), h_(h), q_(1) {
  if (!is_prime(p)) throw DomainError("not-prime", std::to_string(p) + " is not prime");
  if (h == 0) throw DomainError("bad-degree", "extension degree must be at least 1");
  for (std::uint32_t i = 0; i < h; ++i) {
    if (static_cast<std::uint64_t>(q_) * p > kMaxOrder)
      throw DomainError("field-too-large", "p^h exceeds 2^16");
    q_ *= p;
  }

  for (std::uint32_t code = 0; code < q_; ++code) {
    Poly low = decode(code, p, h);
    if (is_irreducible(low, p)) {
      modulus_ = std::move(low);
      break;
    }
  }

  const auto factors = prime_factors(q_ - 1);
  std::uint32_t primitive = 0;
  for (std::uint32_t g = 1; g < q_ && primitive == 0; ++g) {
    const Poly gp = decode(g, p, h);
    bool ok = true;
    for (auto r : factors) {
      const Poly t = pow_mod(gp, (q_ - 1) / r, modulus_, p);
      if (encode(t, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) primitive = g;
  }
  if (q_ == 2) primitive = 1;

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  const Poly gp = decode(primitive, p, h);
  Poly cur = decode(1, p, h);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const std::uint32_t x = encode(cur, p);
    exp_[i] = x;
    log_[x] = i;
    cur = mul_mod(cur, gp, modulus_, p);
  }
  if (encode(cur, p) != 1) throw DomainError("internal", "primitive element has wrong order");
}

FieldElement FiniteField::element(std::uint32_t encoded) const {
  if (encoded >= q_) throw DomainError("bad-element", std::to_string(encoded) + " is not a field element code");
  return {encoded};
}

FieldElement FiniteField::add(FieldElement x, FieldElement y) const noexcept {
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < h_; ++i) {
    out += ((x.value % p_ + y.value % p_) % p_) * place;
    x.value /= p_;
    y.value /= p_;
    place *= p_;
  }
  return {out};
}

FieldElement FiniteField::sub(FieldElement x, FieldElement y) const noexcept {
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < h_; ++i) {
    out += ((x.value % p_ + p_ - y.value % p_) % p_) * place;
    x.value /= p_;
    y.value /= p_;
    place *= p_;
  }
  return {out};
}

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const noexcept {
  if (x.value == 0 || y.value == 0) return zero();
  return {exp_[(log_[x.value] + log_[y.value]) % (q_ - 1)]};
}

FieldElement FiniteField::inv(FieldElement x) const {
  if (x.value == 0) throw DomainError("division-by-zero", "zero has no inverse");
  return {exp_[(q_ - 1 - log_[x.value]) % (q_ - 1)]};
}

FieldElement FiniteField::pow(FieldElement x, std::int64_t e) const {
  if (x.value == 0) {
    if (e < 0) throw DomainError("division-by-zero", "negative power of zero");
    return e == 0 ? one() : zero();
  }
  return exp(static_cast<std::int64_t>(log_[x.value]) * e);
}

std::uint32_t FiniteField::log(FieldElement x) const {
  if (x.value == 0) throw DomainError("log-of-zero", "zero has no discrete logarithm");
  return log_[x.value];
}

FieldElement FiniteField::exp(std::int64_t e) const noexcept {
  const auto m = static_cast<std::int64_t>(q_ - 1);
  return {exp_[static_cast<std::size_t>(((e % m) + m) % m)]};
}

FiniteField make_field(std::uint32_t p, std::uint32_t h) { return FiniteField(p, h); }

}  // namespace deza
