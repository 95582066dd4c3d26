#include "sepsym/error.hpp"

namespace sepsym {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoModulusAvailable: return "NoModulusAvailable";
    case ErrorKind::BadModulusTable: return "BadModulusTable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TooMany: return "TooMany";
    case ErrorKind::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::UnsupportedScale: return "UnsupportedScale";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::BadLiteral: return "BadLiteral";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Falsified: return "Falsified";
  }
  return "Error";
}

}  // namespace sepsym
