#pragma once

#include <stdexcept>
#include <string>

namespace fcpoly {

// Failure codes surfaced by library operations. A formula transcription bug
// shows up as non_exact_division instead of a silently wrong polynomial.
enum class ErrorCode {
  non_exact_division,
  divide_by_zero,
  index_out_of_range,
  cap_exceeded,
  table_too_small,
  invalid_placement,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_exact_division: return "NON_EXACT_DIVISION";
    case ErrorCode::divide_by_zero: return "DIVIDE_BY_ZERO";
    case ErrorCode::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::cap_exceeded: return "CAP_EXCEEDED";
    case ErrorCode::table_too_small: return "TABLE_TOO_SMALL";
    case ErrorCode::invalid_placement: return "INVALID_PLACEMENT";
  }
  return "UNKNOWN";
}

}  // namespace fcpoly
