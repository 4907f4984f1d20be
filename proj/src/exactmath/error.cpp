#include "fiberlab/error.hpp"

namespace fiberlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::BasisNotClosed: return "BasisNotClosed";
    case ErrorKind::HopfMapInconsistent: return "HopfMapInconsistent";
    case ErrorKind::StepCapExceeded: return "StepCapExceeded";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::MissingCoalgebraData: return "MissingCoalgebraData";
    case ErrorKind::UnsupportedCentralShape: return "UnsupportedCentralShape";
    case ErrorKind::UnrecognizedRoot: return "UnrecognizedRoot";
    case ErrorKind::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorKind::CHViolation: return "CHViolation";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fiberlab
