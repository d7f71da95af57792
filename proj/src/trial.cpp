#include "balrig/trial.hpp"

#include <string>

#include "rng.hpp"

namespace balrig {

void TrialPolicy::validate() const {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  if (prime >= (1ULL << 63) || !is_prime(prime)) {
    throw InvalidInput("prime " + std::to_string(prime) + " is not a prime below 2^63");
  }
}

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  return detail::splitmix64(detail::splitmix64(seed) ^ static_cast<std::uint64_t>(index));
}

}  // namespace balrig
