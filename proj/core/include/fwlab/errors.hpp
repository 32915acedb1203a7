#pragma once

#include <stdexcept>
#include <string>

namespace fwlab {

/// Base class for every numerical precondition failure raised by fwlab.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Input outside the mathematical domain of an operation (negative mass,
/// singular momentum, 1/m family at m = 0, ...).
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A matrix function was asked for a value outside its branch.
class BranchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonNormalError : public NumericalError {
 public:
  NonNormalError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotUnitaryError : public NumericalError {
 public:
  NotUnitaryError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fwlab
