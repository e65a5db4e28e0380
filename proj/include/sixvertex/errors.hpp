#pragma once

#include <stdexcept>
#include <string>

namespace sixvertex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation (site out of range, bad sizes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A weight denominator phi(t + eta) (or an inverse weight) vanished.
class SingularWeightError : public Error {
 public:
  using Error::Error;
};

/// Parameters too close to a degenerate configuration (coinciding roots,
/// numerically singular F, vanishing Bethe vector).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The monodromy block assignment failed its vacuum-action check.
/// Indicates a programming bug, not a user error.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Permutation sums refused because M exceeds the configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Newton/homotopy solver failed; the message carries the attempt trace.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or roots document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sixvertex
