#include "slicecheck/error.hpp"

namespace slicecheck {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Column: return "column";
    case ErrorCode::Kind: return "kind";
    case ErrorCode::Count: return "count";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Coverage: return "coverage";
    case ErrorCode::Orientation: return "orientation";
    case ErrorCode::Inversion: return "inversion";
    case ErrorCode::Label: return "label";
    case ErrorCode::Bounds: return "bounds";
    case ErrorCode::Argument: return "argument";
    case ErrorCode::Format: return "format";
    case ErrorCode::Value: return "value";
    case ErrorCode::Alignment: return "alignment";
    case ErrorCode::Fetch: return "fetch";
    case ErrorCode::Integrity: return "integrity";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace slicecheck
