#pragma once

#include <stdexcept>
#include <string>

namespace gflab {

// Base of every failure the library reports. Callers that only care about
// "configuration vs numerics" can catch the two intermediate classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ValidityError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DomainError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IllConditionedError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace gflab
