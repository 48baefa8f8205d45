#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlsmodcat {

enum class ErrorKind {
  DivisionByZero,
  IncompatibleConductor,
  ParentMismatch,
  SizeBound,
  NotInSubgroup,
  OutOfRange,
  ValidationFailed,
  DimensionMismatch,
  ConfluenceFailure,
  IsoCheckFailed,
  HypothesisViolated,
  CocycleInvalid,
  NotClosed,
  NotExteriorDatum,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleConductor: return "IncompatibleConductor";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConfluenceFailure: return "ConfluenceFailure";
    case ErrorKind::IsoCheckFailed: return "IsoCheckFailed";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CocycleInvalid: return "CocycleInvalid";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotExteriorDatum: return "NotExteriorDatum";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qlsmodcat
