#include "irtrans/error.hpp"

namespace irtrans {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedIR: return "MalformedIR";
    case ErrorCode::kDanglingLabel: return "DanglingLabel";
    case ErrorCode::kDemanglerFailure: return "DemanglerFailure";
    case ErrorCode::kMissingFrontend: return "MissingFrontend";
    case ErrorCode::kIOError: return "IOError";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kUnknownByte: return "UnknownByte";
    case ErrorCode::kSequenceTooLong: return "SequenceTooLong";
    case ErrorCode::kEmptyMaskSet: return "EmptyMaskSet";
    case ErrorCode::kNonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::kMissingIR: return "MissingIR";
    case ErrorCode::kCheckpointMismatch: return "CheckpointMismatch";
    case ErrorCode::kCompileFailure: return "CompileFailure";
    case ErrorCode::kToolchainMissing: return "ToolchainMissing";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidEvalSet: return "InvalidEvalSet";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace irtrans
