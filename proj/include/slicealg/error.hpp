#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicealg {

enum class ErrorCode {
  NonAssociative,
  BadUnit,
  BadTensor,
  DimensionMismatch,
  TooLarge,
  ZeroDivisor,
  NotARoot,
  NotFound,
  NonIntegerTrace,
  NotTangent,
  PreconditionFailed,
  NotIntrinsic,
  InvalidTwist,
  NotPositiveDefinite,
  NoQuaternionFrame,
  BasePointAtInfinity,
  DegenerateImage,
  BadSection,
  SuiteNotApplicable,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace slicealg
