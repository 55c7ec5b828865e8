#include "unmix/error.hpp"

namespace unmix {

const char* error_token(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DegenerateEndmembers: return "DegenerateEndmembers";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SingularQ: return "SingularQ";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::CombinatorialCap: return "CombinatorialCap";
    case ErrorCode::SegmentationFailure: return "SegmentationFailure";
    case ErrorCode::ZeroBand: return "ZeroBand";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::NonPositiveSpectrum: return "NonPositiveSpectrum";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::RaggedCsv: return "RaggedCsv";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::InvalidValue: return "InvalidValue";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_token(code)) + ": " + detail), code_(code) {}

}  // namespace unmix
