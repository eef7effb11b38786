#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace econlab {

/// Broad failure category. The C API maps each kind onto a status code.
enum class ErrorKind {
  argument,
  domain,
  singular,
  complex_spectrum,
  not_diagonalizable,
  convergence,
  bracket,
  diverged,
  horizon,
  stability,
  infeasible,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(ErrorKind::argument, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class BracketError : public Error {
 public:
  explicit BracketError(const std::string& what) : Error(ErrorKind::bracket, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : Error(ErrorKind::convergence, what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// Raised when a fixed-step integration leaves the finite range. `direction`
/// is +1 / -1 for a component running off to +/- infinity and 0 for NaN.
class IntegrationDiverged : public Error {
 public:
  IntegrationDiverged(const std::string& what, std::size_t step, std::size_t component, int direction)
      : Error(ErrorKind::diverged, what), step_(step), component_(component), direction_(direction) {}

  std::size_t step() const noexcept { return step_; }
  std::size_t component() const noexcept { return component_; }
  int direction() const noexcept { return direction_; }

 private:
  std::size_t step_;
  std::size_t component_;
  int direction_;
};

}  // namespace econlab
