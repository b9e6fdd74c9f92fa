#pragma once

#include <stdexcept>
#include <string>

namespace skewcoh {

enum class ErrorCode {
  InvalidField,
  CharTwo,
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  NotInvertible,
  OrderExceedsBound,
  NotGStable,
  WrongCase,
  NotACocycle,
  UnsupportedKappaShape,
  UnsupportedGroupShape,
  PrerequisiteFailed,
  InvalidInput,
  InternalInvariant,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// command-line front end can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Throws InternalInvariant when `condition` is false. Used for the
// mathematical containments that must hold on every valid input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::InternalInvariant, what);
}

}  // namespace skewcoh
