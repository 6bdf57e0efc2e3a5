#pragma once

#include <stdexcept>
#include <string>

namespace effindex {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input data violates a contract (bad price, malformed row, duplicate date).
class InvalidInputError : public Error {
public:
  using Error::Error;
};

// Series too short for the requested computation.
class InsufficientDataError : public Error {
public:
  using Error::Error;
};

// Zero-variance input, zero fluctuation, or an otherwise undefined fit.
class DegenerateDataError : public Error {
public:
  using Error::Error;
};

// Out-of-range configuration or generator parameter.
class ParameterError : public Error {
public:
  using Error::Error;
};

// Synthetic-process generation failed (e.g. indefinite circulant embedding).
class GenerationError : public Error {
public:
  using Error::Error;
};

}  // namespace effindex
