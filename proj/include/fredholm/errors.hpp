#pragma once

#include <stdexcept>
#include <string>

namespace fredholm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short class name, used by the CLI when reporting failures.
  virtual const char* kind() const noexcept { return "Error"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidArgument"; }
};

/// Argument outside the domain of a special function (e.g. E1 on its cut).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// A physical quantity is singular at the requested point (r = 0, rho = 0, x = 0).
class SingularPoint : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "SingularPoint"; }
};

/// Kernel or forcing function returned NaN/Inf.
class EvaluationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "EvaluationError"; }
};

/// |Delta(lambda)| fell below the configured tolerance.
class SingularDeterminant : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "SingularDeterminant"; }
};

/// Pivoting found no usable pivot in the Nystrom system.
class SingularMatrix : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "SingularMatrix"; }
};

class DivergenceDetected : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DivergenceDetected"; }
};

class IOError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IOError"; }
};

}  // namespace fredholm
