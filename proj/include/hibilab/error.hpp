#pragma once

#include <stdexcept>
#include <string>

namespace hibilab {

// Bad arguments or bounds (unknown family, depth too large, mismatched n).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value fails a structural invariant: non-semistandard filling,
// non-order-preserving pattern, non-multichain, and so on.  The constraint
// name is a short machine-readable tag.
class InvariantViolation : public std::domain_error {
 public:
  InvariantViolation(std::string constraint, const std::string& what)
      : std::domain_error(constraint + ": " + what), constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

// An enumeration guard or size bound was exceeded.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Standard-monomial reduction could not proceed.
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hibilab
