#pragma once

#include <stdexcept>
#include <string>

namespace jp {

enum class ErrorCode {
  invalid_argument = 1,  // precondition violated by the caller
  parse_error = 2,       // malformed input text
  too_large = 3,         // instance exceeds an enumeration guard
  falsified = 4,         // a construction failed to meet a proved bound
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_argument, what);
}

}  // namespace jp
