#include "houghton/error.hpp"

namespace houghton {

std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::InvalidImage: return "InvalidImage";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::GradeZero: return "GradeZero";
    case ErrorCode::GradeNotOne: return "GradeNotOne";
    case ErrorCode::NotInM: return "NotInM";
    case ErrorCode::DuplicateCarrier: return "DuplicateCarrier";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::InvariantMismatch: return "InvariantMismatch";
    case ErrorCode::CriterionFailed: return "CriterionFailed";
    case ErrorCode::NotMaximalBelow: return "NotMaximalBelow";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ImageNotInRegion: return "ImageNotInRegion";
    case ErrorCode::InfeasibleBounds: return "InfeasibleBounds";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(code_name(code)) + ": " + detail), code_(code), detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace houghton
