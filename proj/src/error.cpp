#include "pca/error.hpp"

namespace pca {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NoSolutionInconsistency: return "NoSolutionInconsistency";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NotABimodule: return "NotABimodule";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NotIdempotentModJ: return "NotIdempotentModJ";
    case ErrorKind::NotSeparableQuotient: return "NotSeparableQuotient";
    case ErrorKind::CoboundaryUnsolvable: return "CoboundaryUnsolvable";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::IncompatibleCoordinates: return "IncompatibleCoordinates";
    case ErrorKind::EmptyQuiver: return "EmptyQuiver";
    case ErrorKind::NonComposableRelation: return "NonComposableRelation";
    case ErrorKind::InternalVerificationFailed: return "InternalVerificationFailed";
  }
  return "Unknown";
}

}  // namespace pca
