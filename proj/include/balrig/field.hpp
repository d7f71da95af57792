#pragma once

#include <cstdint>

namespace balrig {

using Residue = std::uint64_t;

/// 2^62 - 57, the largest prime below 2^62.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime p < 2^63. Elements are canonical residues in
/// [0, p); products go through a 128-bit intermediate.
class PrimeField {
 public:
  /// Throws InvalidInput unless p is a prime below 2^63.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + (p_ - b); }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Residue pow(Residue base, std::uint64_t exp) const;
  /// Throws InvalidInput for a == 0.
  Residue inv(Residue a) const;
  Residue from_int(std::int64_t v) const;

 private:
  std::uint64_t p_;
};

/// Checks primality and a handful of field identities (inverse, Fermat,
/// distributivity) on pseudo-random elements. Returns false on any failure.
bool field_self_check(std::uint64_t p, std::uint64_t seed = 1);

}  // namespace balrig
