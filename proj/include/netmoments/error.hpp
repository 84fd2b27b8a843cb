#pragma once

#include <stdexcept>
#include <string>

namespace nm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a hard size limit, or a graph is too small for a motif.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: non-PSD covariance, degenerate denominators.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nm
