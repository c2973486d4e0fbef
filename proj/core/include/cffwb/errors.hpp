#pragma once

#include <stdexcept>
#include <string>

namespace cffwb {

/// Base class for all workbench errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside an operation's domain.
class domain_error : public error {
 public:
  using error::error;
};

/// Malformed textual input; message carries a line number where known.
class parse_error : public error {
 public:
  using error::error;
};

/// Instance exceeds a desk-scale cap or a search budget.
class budget_error : public error {
 public:
  using error::error;
};

/// Operation not defined for this input (e.g. matching on a general graph,
/// Hadamard order with no implemented construction).
class unsupported_error : public error {
 public:
  using error::error;
};

/// Dangling references or inconsistent composite objects.
class structural_error : public error {
 public:
  using error::error;
};

/// A bound or formula whose preconditions do not hold for these parameters.
class inapplicable_error : public error {
 public:
  using error::error;
};

}  // namespace cffwb
