#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace terracini {

/// Largest prime below 2^62.  Keeping the modulus under 2^62 means sums of
/// two reduced values fit in 64 bits and products fit in 128 bits.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for the prime field F_p.  Element values are plain
/// uint64_t in [0, p); the context supplies the operations.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element pow(Element a, std::uint64_t e) const;
  /// Inverse of a nonzero element (Fermat).  Throws on zero.
  Element inv(Element a) const;

  /// Reduction of a (possibly negative) machine integer.
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Element>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace terracini
