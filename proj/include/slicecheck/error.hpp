#pragma once

#include <stdexcept>
#include <string>

namespace slicecheck {

// Error categories surfaced by the library. The CLI maps Io/Fetch to exit
// code 2 and everything else to exit code 1.
enum class ErrorCode {
  Parse,
  Schema,
  Column,
  Kind,
  Count,
  Domain,
  Coverage,
  Orientation,
  Inversion,
  Label,
  Bounds,
  Argument,
  Format,
  Value,
  Alignment,
  Fetch,
  Integrity,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + " error: " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace slicecheck
