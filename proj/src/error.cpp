#include "slicealg/error.hpp"

namespace slicealg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::BadTensor: return "BadTensor";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NonIntegerTrace: return "NonIntegerTrace";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotIntrinsic: return "NotIntrinsic";
    case ErrorCode::InvalidTwist: return "InvalidTwist";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NoQuaternionFrame: return "NoQuaternionFrame";
    case ErrorCode::BasePointAtInfinity: return "BasePointAtInfinity";
    case ErrorCode::DegenerateImage: return "DegenerateImage";
    case ErrorCode::BadSection: return "BadSection";
    case ErrorCode::SuiteNotApplicable: return "SuiteNotApplicable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace slicealg
