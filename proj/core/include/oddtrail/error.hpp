#pragma once

#include <stdexcept>
#include <string>

namespace oddtrail {

enum class ErrorKind {
  kInvalidInput,      // malformed files, ids out of range
  kPrecondition,      // a documented precondition of an operation does not hold
  kNotFound,          // a search finished without a witness (e.g. too few odd circuits)
  kBoundExceeded,     // exhaustive search refused because the instance is too large
  kTheoremViolation,  // a branch the constructive proof rules out was reached
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kPrecondition, what);
}

// Internal invariant that the underlying proof guarantees.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kTheoremViolation, what);
}

}  // namespace oddtrail
