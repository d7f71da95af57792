#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>

#include "balrig/errors.hpp"
#include "balrig/field.hpp"

namespace balrig {

/// How "generic" is realized: independent Theta draws over F_p whose verdicts
/// must agree. On disagreement the draw count is doubled once with fresh
/// seeds; if those still disagree the computation fails.
struct TrialPolicy {
  int trials = 3;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;

  void validate() const;
};

struct TrialMeta {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 0;          // draws actually evaluated
  bool escalated = false;  // the first round disagreed
  /// Schwartz-Zippel bound on a single draw being degenerate: degree / p.
  double failure_bound = 0.0;
};

/// Seed of draw `index` under base seed `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, int index);

/// Evaluates `fn(field, draw_seed)` under the policy and returns the common
/// result of the accepted round. `degree` feeds the reported failure bound.
template <class Result>
std::pair<Result, TrialMeta> run_trials(
    const TrialPolicy& policy, double degree,
    const std::function<Result(const PrimeField&, std::uint64_t)>& fn) {
  policy.validate();
  const PrimeField field(policy.prime);
  TrialMeta meta;
  meta.prime = policy.prime;
  meta.seed = policy.seed;
  meta.failure_bound = degree / static_cast<double>(policy.prime);

  auto round = [&](int first, int count, bool& agreed) {
    Result head = fn(field, trial_seed(policy.seed, first));
    agreed = true;
    for (int t = 1; t < count; ++t) {
      if (!(fn(field, trial_seed(policy.seed, first + t)) == head)) agreed = false;
    }
    meta.trials += count;
    return head;
  };

  bool agreed = false;
  Result result = round(0, policy.trials, agreed);
  if (agreed) return {std::move(result), meta};

  meta.escalated = true;
  result = round(policy.trials, 2 * policy.trials, agreed);
  if (agreed) return {std::move(result), meta};

  std::ostringstream os;
  os << "randomized trials disagree (prime " << policy.prime << ", seed "
     << policy.seed << ", " << meta.trials << " draws)";
  throw TrialDisagreement(os.str());
}

}  // namespace balrig
