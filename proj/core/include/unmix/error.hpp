#pragma once

#include <stdexcept>
#include <string>

namespace unmix {

enum class ErrorCode {
  EmptyVector,
  NotSquare,
  NegativeRadicand,
  SpecMismatch,
  DegenerateEndmembers,
  RankTooLarge,
  ShapeMismatch,
  DegenerateInput,
  SingularQ,
  RankDeficient,
  CombinatorialCap,
  SegmentationFailure,
  ZeroBand,
  ZeroReference,
  ZeroColumn,
  NonPositiveSpectrum,
  HeaderMismatch,
  TruncatedPayload,
  RaggedCsv,
  NonNumericCell,
  UnknownModel,
  BadConfig,
  InvalidValue,
};

const char* error_token(ErrorCode code);

// All fatal failures surface as Error; the token is stable and
// machine-parseable (the CLI prints "error: <token>: <detail>").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }
  const char* token() const { return error_token(code_); }

 private:
  ErrorCode code_;
};

}  // namespace unmix
