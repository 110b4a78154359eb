#pragma once

#include <stdexcept>
#include <string>

namespace topq {

enum class ErrorKind {
  Parse,
  DuplicateVertex,
  UnknownVertex,
  NotSimplicial,
  NotClosed,
  NonOrientable,
  NotSubcomplex,
  ConeNotDefined,
  DegreeMismatch,
  DimensionMismatch,
  SingularPairing,
  SingularDuality,
  HypothesisViolated,
  ApproximationUnavailable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace topq
