#pragma once

#include <stdexcept>
#include <string>

namespace cellcat {

enum class ErrorKind {
  UnknownGenerator,
  InvalidSystem,
  ParseError,
  BudgetExceeded,
  BadBaseChoice,
  RadiusTooSmall,
  VertexOutsideGraph,
  WavefrontOutOfRadius,
  ZigzagTruncationViolated,
  InconsistentDifferential,
  NotMinimal,
  EmptyComplex,
  NoAnchorFound,
  IndexOutOfRange,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cellcat
