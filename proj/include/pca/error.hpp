#pragma once

#include <stdexcept>
#include <string>

namespace pca {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  UnsupportedField,
  AmbientMismatch,
  BadSpec,
  Parse,
  NotAssociative,
  NoUnit,
  NotAnExtension,
  NotAnIdeal,
  ImproperIdeal,
  NotAHom,
  TooLarge,
  NotSemisimple,
  NotCoprime,
  NoSolutionInconsistency,
  NotADerivation,
  NotABimodule,
  NotSeparable,
  NotIdempotentModJ,
  NotSeparableQuotient,
  CoboundaryUnsolvable,
  TheoremViolation,
  IncompatibleCoordinates,
  EmptyQuiver,
  NonComposableRelation,
  InternalVerificationFailed,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pca
