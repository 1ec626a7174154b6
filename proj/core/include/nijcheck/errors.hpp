#pragma once

#include <stdexcept>
#include <string>

namespace nijcheck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-finite intermediate value or an evaluation that could not be completed.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The projection pole of the requested chart is (numerically) hit.
class PoleSingularity : public Error {
 public:
  using Error::Error;
};

/// Operation divides by |x| and the point is within delta_ball of the chart origin.
class OriginSingularity : public Error {
 public:
  using Error::Error;
};

/// Operation needs xi and the point is within delta_ring of the unit ring |x| = 1.
class SingularRing : public Error {
 public:
  using Error::Error;
};

class NotAlmostComplex : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LinearSolveFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Evaluation requested outside the domain of a tabulated field.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (files, flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nijcheck
