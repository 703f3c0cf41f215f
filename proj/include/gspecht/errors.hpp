#pragma once

#include <stdexcept>
#include <string>

namespace gspecht {

/// Invalid input parameters (bad prime, e not dividing p-1, node not removable, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Field arithmetic failure, e.g. inverting zero.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A configured size bound would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency assertion failed: the cellular conventions, the
/// eigenvalue set of the X_r, or an invertibility guarantee did not hold.
struct ConventionError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gspecht
