#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmian {

enum class ErrorKind {
  NotNormalized,
  NoGreekLatinPivot,
  DivisionByZero,
  IncompatibleFields,
  SyntaxError,
  NonPositiveRadicand,
  OutOfDomain,
  InvalidParams,
  NotPrimitive,
  AmbiguousFixedPoint,
  NoFixedPointWithStart,
  FactorAbsent,
  PeriodicSource,
  ResourceExhausted,
  NoMatch,
  RationalSlope,
  NotCloseable,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module; `kind()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sturmian
