#pragma once

#include <stdexcept>
#include <string>

namespace diskres {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported evaluation domain of a kernel.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a singular point (e.g. Hankel function at z = 0).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Malformed or physically invalid input parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Root found, but it belongs to a different radial family than requested.
class WrongBranchError : public Error {
 public:
  WrongBranchError(const std::string& what, int expected_ell, int found_ell)
      : Error(what), expected_ell_(expected_ell), found_ell_(found_ell) {}

  int expected_ell() const noexcept { return expected_ell_; }
  int found_ell() const noexcept { return found_ell_; }

 private:
  int expected_ell_;
  int found_ell_;
};

/// The argument-principle contour passes (numerically) through a root.
class BoundaryTooCloseError : public Error {
 public:
  using Error::Error;
};

/// m = 0 has no centrifugal barrier.
class NoBarrierError : public Error {
 public:
  using Error::Error;
};

/// dL/dn keeps one sign over the sweep, so there is no turnover point.
class NoThresholdError : public Error {
 public:
  using Error::Error;
};

/// Boundary trace has too few samples to resolve the requested momenta.
class UndersampledError : public Error {
 public:
  using Error::Error;
};

/// Degenerate or inconsistent sampling grid.
class GridError : public Error {
 public:
  using Error::Error;
};

}  // namespace diskres
