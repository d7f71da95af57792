#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "balrig/field.hpp"

namespace balrig::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInput = 3,
  kSizeCap = 4,
  kTrialDisagreement = 5,
  kFailure = 1,  // selftest failures and internal errors
};

struct CommandConfig {
  std::string subcommand;  // shift | analyze | laman | mcheck | generate | selftest
  std::string graph_path;
  std::string complex_path;
  std::string inline_spec;  // JSON text in place of a file
  int k = 2;
  int l = 2;
  std::string order = "default";  // default | interleaved | explicit tokens
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  std::uint64_t seed = 1;
  std::string format = "json";  // json | table
  std::string family;
  std::map<std::string, long long> params;  // generator parameters
  std::string mode;                         // generator augmentation mode
  bool stresses = false;                    // analyze: include a stress basis
};

/// Runs one command, writing the report to `out` and structured errors to
/// `err`. Returns the process exit code.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace balrig::cli
