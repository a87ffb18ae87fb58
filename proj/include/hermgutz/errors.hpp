#pragma once

#include <stdexcept>
#include <string>

namespace hg {

/// Failure classes surfaced by the library (mirrored by the C API status codes).
enum class ErrorCode {
  input = 1,       // bad argument (dimension mismatch, non-finite value, ...)
  capability = 2,  // request exceeds configured caps (degree, imaginary range)
  domain = 3,      // argument outside the mathematical domain of the operation
  accuracy = 4,    // quadrature refinement (doubling) test failed
  io = 5,          // file I/O or parse failure
  config = 6,      // invalid run configuration
  internal = 7
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace hg
