#pragma once

#include <stdexcept>
#include <string>

namespace spinwit {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  index_out_of_range,
  numerical,
  no_crossing,
  config,
  resource_cap,
  validation,
  io,
};

// All library failures are reported through this exception; the C API maps
// `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace spinwit
