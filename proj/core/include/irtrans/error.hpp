#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irtrans {

// Every domain failure the toolkit can report. The CLI prints error_name()
// so each code must map to a distinct identifier.
enum class ErrorCode {
  kMalformedIR,
  kDanglingLabel,
  kDemanglerFailure,
  kMissingFrontend,
  kIOError,
  kEmptyCorpus,
  kUnknownByte,
  kSequenceTooLong,
  kEmptyMaskSet,
  kNonFiniteLoss,
  kMissingIR,
  kCheckpointMismatch,
  kCompileFailure,
  kToolchainMissing,
  kEmptyInput,
  kUnknownToken,
  kInvalidArgument,
  kInvalidEvalSet,
  kUnsupportedFormat,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace irtrans
