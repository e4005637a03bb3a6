#pragma once

#include <stdexcept>
#include <string>

namespace stc {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  Capacity,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw Error(ErrorCode::InvalidArgument, msg);
}

[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw Error(ErrorCode::ParseError, msg);
}

[[noreturn]] inline void fail_capacity(const std::string& msg) {
  throw Error(ErrorCode::Capacity, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(ErrorCode::Internal, msg);
}

// Invariant check that stays active in release builds. These guard
// contracts that must hold on every run; a failure maps to exit code 3
// in the CLI.
inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) fail_internal(msg);
}

}  // namespace stc
