#pragma once

#include <stdexcept>
#include <string>

namespace imcert {

// Caller handed us input that violates a documented precondition.
class PreconditionViolated : public std::runtime_error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

// An invariant the construction relies on failed at runtime. This always
// indicates a bug in the library, never bad input.
class InternalAssertion : public std::runtime_error {
 public:
  explicit InternalAssertion(const std::string& what)
      : std::runtime_error(what) {}
};

// Input exceeds a hard size guard of an exponential-time routine.
class SizeLimit : public std::runtime_error {
 public:
  explicit SizeLimit(const std::string& what) : std::runtime_error(what) {}
};

// The const char* overloads keep literal messages free of std::string
// construction on the hot path; the exception text is built only on failure.
inline void require(bool cond, const char* msg) {
  if (!cond) throw PreconditionViolated(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionViolated(msg);
}

inline void ensure(bool cond, const char* msg) {
  if (!cond) throw InternalAssertion(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalAssertion(msg);
}

}  // namespace imcert
