#pragma once

#include <stdexcept>
#include <string>

namespace infl {

enum class ErrorCode {
  invalid_argument = 1,
  io = 2,
  parse = 3,
  numeric = 4,
  state = 5,
};

// All library failures are reported through this type; the C API maps
// code() onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace infl
