#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tornheim/types.hpp"

namespace tornheim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kernel was asked for its value at (or within the pole threshold of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The point lies on, or too close to, a true singular hyperplane.
class SingularPointError : public Error {
 public:
  SingularPointError(const std::string& what, std::vector<SingularityReport> reports)
      : Error(what), reports_(std::move(reports)) {}

  const std::vector<SingularityReport>& reports() const noexcept { return reports_; }

 private:
  std::vector<SingularityReport> reports_;
};

/// Shell summation hit the configured order cap before meeting the tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The left-hand prefactor of a recombination identity vanishes at the point.
class PrefactorZeroError : public Error {
 public:
  using Error::Error;
};

/// No recombination identity is usable at the point.
class MethodUnavailableError : public Error {
 public:
  using Error::Error;
};

/// Residue estimation found no simple pole at the requested location.
class NotAPoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace tornheim
