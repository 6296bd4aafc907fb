#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cdual {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A net or grid operation addressed a cell outside its window.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A net could not be built because the generating function was undefined.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the family a routine is defined for.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a real function (e.g. s, t not in (0,1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A hypothesis of the decision fails for the given input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// factorize22 called outside the b0^2 > 4 a0 case.
class WrongCaseError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Line density requested where b(m)^2 = 4 a(m); the two exponents coincide.
class DegenerateDensityError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Quadrature exhausted its evaluation budget before reaching the tolerance.
class NumericalBudgetError : public Error {
 public:
  NumericalBudgetError(const std::string& what, double best_residual, long evaluations)
      : Error(what), best_residual_(best_residual), evaluations_(evaluations) {}

  double best_residual() const noexcept { return best_residual_; }
  long evaluations() const noexcept { return evaluations_; }

 private:
  double best_residual_;
  long evaluations_;
};

// Malformed JSON input. `pointer` is an RFC 6901 JSON pointer to the offending
// node.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace cdual
