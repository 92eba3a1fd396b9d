#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

enum class ErrorKind {
  ForeignElement,
  UnknownElement,
  TooLarge,
  NotUpwardClosed,
  NotProper,
  NotAPreValuation,
  DegenerateInput,
  NotAnAtom,
  ThetaOutOfRange,
  TargetOutOfRange,
  NegativeIndex,
  AngleTooSmall,
  DegeneratePair,
  AlreadyAbove,
  TooManyRounds,
  Format,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` is the machine-testable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sasaki
