#pragma once

#include <stdexcept>
#include <string>

namespace eqas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Out-of-range sizes, mismatched shapes, invalid configuration values.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Qubit or parameter index out of range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Non-finite angles, inputs or gradients.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// Malformed genomes or unresolved circuit parameters.
class DecodeError : public Error {
  public:
    using Error::Error;
};

/// API misuse: stepping a finished episode, empty inputs where data is required.
class UsageError : public Error {
  public:
    using Error::Error;
};

} // namespace eqas
