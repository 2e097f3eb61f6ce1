#pragma once

#include <stdexcept>
#include <string>

namespace legch {

enum class ErrorKind {
  Syntax,
  PositionOutOfRange,
  OddStrandCount,
  MultiComponent,
  InvalidArgument,
  RotationNonzero,
  InternalInconsistency,
  SearchTooLarge,
  NotSpecialForm,
  MaslovZero,
  NotAnAugmentation,
  DualityViolation,
};

const char* to_string(ErrorKind kind) noexcept;

// Errors caused by malformed user input (as opposed to computation failures).
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace legch
