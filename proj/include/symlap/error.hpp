#pragma once

#include <stdexcept>
#include <string>

namespace symlap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (edge lists, command arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its supported range (family sizes, scan sizes, p < 0).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The graph violates a structural precondition (disconnected, isolated vertex).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that should be a density matrix is not (negative eigenvalue, bad trace).
class SpectrumError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(int sweeps, double residual)
      : Error("jacobi_eigen did not converge after " + std::to_string(sweeps) +
              " sweeps (off-diagonal residual " + std::to_string(residual) + ")"),
        sweeps_(sweeps),
        residual_(residual) {}

  int sweeps() const noexcept { return sweeps_; }
  double residual() const noexcept { return residual_; }

 private:
  int sweeps_;
  double residual_;
};

/// A construction identity (trace-out, edge doubling) failed numerically.
class IdentityError : public Error {
 public:
  using Error::Error;
};

}  // namespace symlap
