#pragma once

#include <stdexcept>
#include <string>

namespace sst {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Odd or mismatched plane dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A sample outside [0, 2^bit_depth).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Unsupported or inconsistent transform / quantizer configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sst
