#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorentz {

/// Machine-readable failure categories; the CLI prints `to_string(code)`.
enum class ErrorCode {
  invalid_argument,
  parse_error,
  shape_mismatch,
  index_out_of_range,
  degree_underflow,
  not_symmetric,
  zero_form,
  singular_coordinate_change,
  precondition_violation,
  budget_exhausted,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::shape_mismatch: return "shape_mismatch";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::degree_underflow: return "degree_underflow";
    case ErrorCode::not_symmetric: return "not_symmetric";
    case ErrorCode::zero_form: return "zero_form";
    case ErrorCode::singular_coordinate_change: return "singular_coordinate_change";
    case ErrorCode::precondition_violation: return "precondition_violation";
    case ErrorCode::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lorentz
