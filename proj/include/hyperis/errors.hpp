#pragma once

#include <stdexcept>
#include <string>

namespace hyperis {

enum class ErrorKind {
  SyntaxError,
  NonMonotone,
  EmptyClause,
  IdOutOfRange,
  FreeVariable,
  IndexOutOfRange,
  ForcedQuery,
  BudgetExceeded,
  TooLarge,
  NegativeLambda,
  NotAntiferromagnetic,
  InvalidEps,
  InvalidTolerance,
  NotRegular,
  NotSuitable,
  DomainError,
  UnknownName,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::EmptyClause: return "EmptyClause";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::FreeVariable: return "FreeVariable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ForcedQuery: return "ForcedQuery";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NegativeLambda: return "NegativeLambda";
    case ErrorKind::NotAntiferromagnetic: return "NotAntiferromagnetic";
    case ErrorKind::InvalidEps: return "InvalidEps";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotSuitable: return "NotSuitable";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + msg);
}

}  // namespace hyperis
