#pragma once

#include <stdexcept>
#include <string>

namespace gnls {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad grid, bad exponent, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

/// e^{sigma*||xi||} would exceed the representable guard on this grid.
struct OverflowGuard : Error {
  using Error::Error;
};

/// Fixed-point iteration failed to converge within the iteration budget.
struct NoConvergence : Error {
  using Error::Error;
};

/// Input is degenerate for the requested computation (e.g. identically zero).
struct DegenerateInput : Error {
  using Error::Error;
};

}  // namespace gnls
