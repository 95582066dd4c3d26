#ifndef SEPSYM_ERROR_HPP
#define SEPSYM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sepsym {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  NoModulusAvailable,
  BadModulusTable,
  DivisionByZero,
  TooMany,
  AmbientTooSmall,
  FieldMismatch,
  TruncationMismatch,
  UnsupportedScale,
  NotSeparating,
  NotDivisor,
  DegreeMismatch,
  NotMonic,
  ParameterMismatch,
  BadLiteral,
  InvalidArgument,
  Falsified,  // a verified statement failed to re-verify; treated as a build error
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sepsym

#endif
