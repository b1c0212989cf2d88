#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betaspec {

enum class ErrorCode {
  config,
  parse,
  invalid_order,
  invalid_parameter,
  size_limit,
  zero_root,
  pole,
  convergence_failure,
  refinement_failure,
  inconsistency,
  singularity,
  unknown_test_function,
  unknown_target,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code survives the trip
/// through the C API as a `bs_status`.
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

}  // namespace betaspec
