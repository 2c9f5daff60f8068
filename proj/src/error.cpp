#include "respcut/error.hpp"

namespace respcut {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kEndpointOutOfRange: return "endpoint_out_of_range";
    case ErrorCode::kSelfLoop: return "self_loop";
    case ErrorCode::kZeroWeight: return "zero_weight";
    case ErrorCode::kNotSpanning: return "not_spanning";
    case ErrorCode::kRootOutOfRange: return "root_out_of_range";
    case ErrorCode::kRootInQuery: return "root_in_query";
    case ErrorCode::kDuplicateVertex: return "duplicate_vertex";
    case ErrorCode::kEmptyQuery: return "empty_query";
    case ErrorCode::kKLimitExceeded: return "k_limit_exceeded";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kUniverseMismatch: return "universe_mismatch";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace respcut
