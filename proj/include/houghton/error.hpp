#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace houghton {

enum class ErrorCode {
  ParseError,
  NotInjective,
  InvalidImage,
  NotBijective,
  GradeZero,
  GradeNotOne,
  NotInM,
  DuplicateCarrier,
  NotAChain,
  InvariantMismatch,
  CriterionFailed,
  NotMaximalBelow,
  NotSupported,
  NotInKernel,
  EmptyComplex,
  NotAPartialOrder,
  NotACover,
  SizeCapExceeded,
  ImageNotInRegion,
  InfeasibleBounds,
  UnknownSuite,
  Overflow,
  PreconditionFailed,
};

std::string_view code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace houghton
