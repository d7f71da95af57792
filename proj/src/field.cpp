#include "balrig/field.hpp"

#include <random>
#include <string>

#include "balrig/errors.hpp"

namespace balrig {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime(p)) {
    throw InvalidInput("field modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const { return powmod(base, exp, p_); }

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidInput("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

Residue PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
  return m == 0 ? 0 : p_ - m;
}

bool field_self_check(std::uint64_t p, std::uint64_t seed) {
  if (p < 3 || p >= (1ULL << 63) || !is_prime(p)) return false;
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 64; ++round) {
    std::uint64_t a = rng() % (p - 1) + 1;
    std::uint64_t b = rng() % p;
    std::uint64_t c = rng() % p;
    if (powmod(a, p - 1, p) != 1) return false;
    if (mulmod(a, powmod(a, p - 2, p), p) != 1) return false;
    std::uint64_t lhs = mulmod(a, (b + c) % p, p);
    std::uint64_t rhs = (mulmod(a, b, p) + mulmod(a, c, p)) % p;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace balrig
