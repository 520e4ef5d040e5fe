#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commlab {

enum class ErrorCode {
  ParseError,
  SingularMatrix,
  NotDivisible,
  OutOfDomain,
  NotAHomomorphism,
  ExponentMismatch,
  NotInvariant,
  LevelBoundExceeded,
  ZeroInput,
  NotPrime,
  InvalidSpec,
  ReducibleCharPoly,
  FiniteOrder,
  ExceedsFactorBound,
  SingularMap,
  NotAnAutomorphism,
  BaseMismatch,
  IncompatibleCocycle,
  DegenerateAction,
  DimensionMismatch,
  UnknownInstantiation,
  UnknownDemo,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps ParseError to exit status 2 and everything else to 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace commlab
