#pragma once

#include <stdexcept>
#include <string>

namespace qstrat {

enum class ErrorKind {
  Validation,
  CapExceeded,
  DegreeMismatch,
  ObjectNotFound,
  OddPartUnsupported,
  DegreeOverflow,
  BoundTooSmall,
  NonSimplicial,
  Unfitted,
};

const char* to_string(ErrorKind kind);

/// Recoverable engine error. The CLI maps the kind onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qstrat
