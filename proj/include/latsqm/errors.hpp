#pragma once

#include <stdexcept>
#include <string>

namespace latsqm {

/// Base class for all library failures that are not plain misuse
/// (misuse throws std::invalid_argument).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated sum could not reach the requested tail tolerance.
class ToleranceNotMet : public Error {
public:
  ToleranceNotMet(const std::string& what, double tail_estimate)
      : Error(what), tail_estimate(tail_estimate) {}
  double tail_estimate;
};

/// A requested window contains a pole of the potential.
class InvalidDomain : public Error {
public:
  explicit InvalidDomain(const std::string& what) : Error(what) {}
};

/// The ground-state recurrence has no nonzero solution.
class NoSeriesSolution : public Error {
public:
  explicit NoSeriesSolution(const std::string& what) : Error(what) {}
};

/// A superpotential does not have the two-term form the series solver needs.
class UnsupportedForm : public Error {
public:
  explicit UnsupportedForm(const std::string& what) : Error(what) {}
};

/// Shape invariance failed at a specific parameter value.
class NotShapeInvariant : public Error {
public:
  NotShapeInvariant(const std::string& what, double parameter)
      : Error(what), parameter(parameter) {}
  double parameter;
};

/// The eigensolver exhausted its sweep budget.
class ConvergenceFailure : public Error {
public:
  ConvergenceFailure(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

/// A model/config file could not be parsed.
class BadConfig : public Error {
public:
  explicit BadConfig(const std::string& what) : Error(what) {}
};

} // namespace latsqm
