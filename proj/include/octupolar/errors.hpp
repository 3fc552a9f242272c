#pragma once

#include <stdexcept>
#include <string>

namespace octupolar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input to a constructor (missing tensor component, non-homogeneous quadratic, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside the range an operation accepts.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A caller-checked precondition failed (e.g. a matrix is not orthogonal).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the region on which a surface is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative or fitting procedure failed its convergence or residual gate.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The configuration sits on a locus where the requested quantity is ill-defined
/// (singular extraneous factor, degenerate critical point, ...).
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace octupolar
