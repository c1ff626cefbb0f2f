#pragma once

#include <stdexcept>
#include <string>

namespace cmprime {

/// Failure categories; the CLI maps these onto process exit codes.
enum class ErrorCode {
  parse = 2,        ///< malformed group description or option value
  unsupported = 3,  ///< input exceeds a supported size limit
  invariant = 4,    ///< an internal identity check failed
  domain = 5,       ///< a precondition on the arguments was violated
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

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace cmprime
