#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbiring {

enum class ErrorKind {
  ClosedFormInapplicable,
  DegenerateWeights,
  PositivityRequired,
  OrderMismatch,
  CoefficientMismatch,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Raised when an operation's mathematical precondition does not hold for the
/// given weight system. The CLI maps these to exit status 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace orbiring
