#pragma once

#include <stdexcept>
#include <string>

namespace jacgb {

// Mixing values from different rings, or mismatched dimensions.
struct RingMismatchError : std::invalid_argument {
  explicit RingMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A requested series coefficient lies below the provably-exact window.
struct TruncationError : std::domain_error {
  explicit TruncationError(const std::string& what) : std::domain_error(what) {}
};

// An iterative numeric routine failed to converge.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition that should hold by construction was violated.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace jacgb
