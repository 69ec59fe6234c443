#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfRange,
  SizeMismatch,
  NotBijective,
  ParseError,
  NotASolution,
  LimitExceeded,
  Io,
};

/// Exception type thrown by every library operation. The code is what the
/// C API hands back to callers; the message is the one-line diagnostic.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ybe
