#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The bilinear form has a null direction where a nondegenerate one is required.
struct DegenerateForm : std::domain_error {
  using std::domain_error::domain_error;
};

/// A restricted form that must be negative definite is not; the norm search would be infinite.
struct IndefiniteRestriction : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotAnIsometry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input vectors do not span a positive definite subspace.
struct NotPositivePlane : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// JSON or command-line input that cannot be decoded.
struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed; indicates a bug, never a property of the input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace k3lat
