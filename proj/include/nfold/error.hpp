#pragma once

#include <stdexcept>
#include <string>

namespace nfold {

enum class ErrorKind {
  IncompatibleRing,
  DivisionByZero,
  ShapeMismatch,
  IndexOutOfRange,
  Unsupported,
  InvalidInput,
  NotQuotientModule,
  Precondition,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace nfold
