#pragma once

#include <stdexcept>
#include <string>

namespace switchgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a switch would push an entry outside {0,1}.
class InvalidSwitch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MarginMismatch : public Error {
 public:
  using Error::Error;
};

class MarginSumMismatch : public Error {
 public:
  using Error::Error;
};

class InfeasibleMargins : public Error {
 public:
  using Error::Error;
};

class NonGraphical : public Error {
 public:
  using Error::Error;
};

class DegenerateGraph : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MotifNotFound : public Error {
 public:
  using Error::Error;
};

/// Signals a broken internal invariant (an implementation bug, never bad input).
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace switchgraph
