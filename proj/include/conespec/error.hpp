#pragma once

#include <stdexcept>
#include <string>

namespace conespec {

enum class ErrorKind {
  InvalidRange,
  EmptySubset,
  DimensionMismatch,
  NotSorted,
  NegativeEntry,
  ResourceLimit,
  SizeLimit,
  NoConvergence,
  Parse,
  Schema,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidRange: return "invalid-range";
    case ErrorKind::EmptySubset: return "empty-subset";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotSorted: return "not-sorted";
    case ErrorKind::NegativeEntry: return "negative-entry";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Schema: return "schema-mismatch";
  }
  return "unknown";
}

}  // namespace conespec
