#pragma once

#include <stdexcept>

namespace alertrank {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input could not be read or output could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value or option combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input that is structurally valid but too degenerate to process:
/// an empty log, a transaction left with no items, or an empty
/// frequent-pattern set where FPOF needs a non-empty one.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace alertrank
