#include "ordfix/error.hpp"

namespace ordfix {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::BadGridStep: return "BadGridStep";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::NotConvergent: return "NotConvergent";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotAnUpperBound: return "NotAnUpperBound";
    case ErrorKind::NotDominating: return "NotDominating";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BadRule: return "BadRule";
    case ErrorKind::BadCount: return "BadCount";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EvalFailure: return "EvalFailure";
    case ErrorKind::MonotonicityBroken: return "MonotonicityBroken";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::BadSeed: return "BadSeed";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidReport: return "InvalidReport";
  }
  return "Unknown";
}

}  // namespace ordfix
