#include "commlab/error.hpp"

namespace commlab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::ExponentMismatch: return "ExponentMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::LevelBoundExceeded: return "LevelBoundExceeded";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ReducibleCharPoly: return "ReducibleCharPoly";
    case ErrorCode::FiniteOrder: return "FiniteOrder";
    case ErrorCode::ExceedsFactorBound: return "ExceedsFactorBound";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::IncompatibleCocycle: return "IncompatibleCocycle";
    case ErrorCode::DegenerateAction: return "DegenerateAction";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownInstantiation: return "UnknownInstantiation";
    case ErrorCode::UnknownDemo: return "UnknownDemo";
  }
  return "Unknown";
}

}  // namespace commlab
