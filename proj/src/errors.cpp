#include "balrig/errors.hpp"

namespace balrig {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid_input";
    case ErrorKind::kSizeCap: return "size_cap";
    case ErrorKind::kTrialDisagreement: return "trial_disagreement";
    case ErrorKind::kInternal: return "internal";
  }
  return "internal";
}

}  // namespace balrig
