#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbg {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kTrivialGame,
  kCapExceeded,
  kNumerical,
  kSchema,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Structured failure raised by every module. `code()` is stable and is what
/// the CLI reports in its machine-readable error stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hbg
