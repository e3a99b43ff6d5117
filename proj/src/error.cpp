#include "sturmian/error.hpp"

namespace sturmian {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NoGreekLatinPivot: return "NoGreekLatinPivot";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleFields: return "IncompatibleFields";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::AmbiguousFixedPoint: return "AmbiguousFixedPoint";
    case ErrorKind::NoFixedPointWithStart: return "NoFixedPointWithStart";
    case ErrorKind::FactorAbsent: return "FactorAbsent";
    case ErrorKind::PeriodicSource: return "PeriodicSource";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::RationalSlope: return "RationalSlope";
    case ErrorKind::NotCloseable: return "NotCloseable";
  }
  return "Unknown";
}

}  // namespace sturmian
