#pragma once

#include <stdexcept>
#include <string>

namespace efcert {

enum class ErrorCode {
  InvalidInput,
  DomainError,
  PrecisionExceeded,
  Unsupported,
  Contradiction,
  Cancelled,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace efcert
