#include "topq/error.hpp"

namespace topq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::NotSubcomplex: return "NotSubcomplex";
    case ErrorKind::ConeNotDefined: return "ConeNotDefined";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularPairing: return "SingularPairing";
    case ErrorKind::SingularDuality: return "SingularDuality";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ApproximationUnavailable: return "ApproximationUnavailable";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace topq
