#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptrev {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  UnknownNode,
  DuplicateNode,
  SelfLoop,
  PortConflict,
  InvalidRail,
  IncompleteBinding,
  UnknownGateKind,
  UnboundVariable,
  InvalidAssignment,
  FloatingGate,
  UndrivenOutput,
  OutputConflict,
  ArityMismatch,
  NotInjective,
  NotInImage,
  OutOfRange,
  Internal,
};

std::string_view error_kind_name(ErrorKind kind);

// All library failures are reported through this type; `kind()` is stable
// and is what tests and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ptrev
