#pragma once

#include <stdexcept>
#include <string>

namespace balrig {

enum class ErrorKind {
  kInvalidInput,       // malformed data, bad parameters, precondition violations
  kSizeCap,            // an exhaustive routine refused an input that is too large
  kTrialDisagreement,  // randomized trials could not agree on a verdict
  kInternal,           // a post-condition failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

class SizeCapExceeded : public Error {
 public:
  explicit SizeCapExceeded(const std::string& what)
      : Error(ErrorKind::kSizeCap, what) {}
};

class TrialDisagreement : public Error {
 public:
  explicit TrialDisagreement(const std::string& what)
      : Error(ErrorKind::kTrialDisagreement, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::kInternal, what) {}
};

}  // namespace balrig
