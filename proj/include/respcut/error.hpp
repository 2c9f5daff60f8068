#ifndef RESPCUT_ERROR_HPP
#define RESPCUT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace respcut {

/// Failure categories raised by the library. Values are stable; the C API
/// re-exports them as rc_status.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kEndpointOutOfRange = 2,
  kSelfLoop = 3,
  kZeroWeight = 4,
  kNotSpanning = 5,
  kRootOutOfRange = 6,
  kRootInQuery = 7,
  kDuplicateVertex = 8,
  kEmptyQuery = 9,
  kKLimitExceeded = 10,
  kDisconnected = 11,
  kUniverseMismatch = 12,
  kParse = 13,
  kIo = 14,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> detail = std::nullopt)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }

  /// Offending edge index, line number or k, depending on the code.
  std::optional<std::size_t> detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> detail_;
};

}  // namespace respcut

#endif  // RESPCUT_ERROR_HPP
