#pragma once

#include <stdexcept>
#include <string>

namespace ordfix {

/// Every failure raised by the library carries a stable kind tag so the CLI
/// can map it to an exit code without string matching.
enum class ErrorKind {
  AntisymmetryViolation,
  UnknownElement,
  BudgetExceeded,
  HypothesisFailed,
  NotALattice,
  BadGridStep,
  UnknownFixture,
  InvalidMap,
  DimensionMismatch,
  EmptySample,
  NotIncreasing,
  BoundViolated,
  NotConvergent,
  BadParams,
  NotAnUpperBound,
  NotDominating,
  Unsupported,
  BadRule,
  BadCount,
  Overflow,
  EvalFailure,
  MonotonicityBroken,
  NoConvergence,
  NoBracket,
  BadSeed,
  BadConfig,
  UsageError,
  IoError,
  InvalidReport,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ordfix
