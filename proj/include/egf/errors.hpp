#pragma once

#include <stdexcept>
#include <string>

namespace egf {

// Input text that does not parse as a coefficient list.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A value that violates a documented invariant of a domain type or operation.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Root finding failed to reach its residual tolerance within the iteration
// cap. Indicates a precision problem rather than a mathematical one.
struct SolveError : std::runtime_error {
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

// Digit rendering (or another precision-audited computation) could not be
// stabilized within the precision escalation cap.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace egf
