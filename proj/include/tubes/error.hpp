#pragma once

#include <stdexcept>
#include <string>

namespace tubes {

enum class ErrorKind {
  NotAdmissible,
  RankMismatch,
  NegativeExt,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Error raised by every library operation. The kind maps onto the CLI exit
/// codes and the message names the offending input.
class TubeError : public std::runtime_error {
 public:
  TubeError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tubes
