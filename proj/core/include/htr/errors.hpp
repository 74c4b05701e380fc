#pragma once

#include <stdexcept>
#include <string>

namespace htr {

// Raised when a series operation is asked for a coefficient outside the
// window in which its inputs are known. Callers that own a truncation
// budget (the recursion engine) catch this and retry deeper.
class InsufficientTruncation : public std::runtime_error {
 public:
  InsufficientTruncation(const std::string& what, int requested, int available)
      : std::runtime_error(what + " (requested exponent " + std::to_string(requested) +
                           ", known below " + std::to_string(available) + ")"),
        requested_(requested),
        available_(available) {}

  int requested() const noexcept { return requested_; }
  int available() const noexcept { return available_; }

 private:
  int requested_;
  int available_;
};

// Arithmetic between a rational scalar and a rational-function scalar.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed (symmetry, residue obstruction,
// basis-conversion remainder...). Always an engine bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace htr
