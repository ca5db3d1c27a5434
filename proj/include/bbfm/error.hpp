#pragma once

#include <stdexcept>
#include <string>

namespace bbfm {

/// Raised when a caller hands an operation values outside its contract
/// (non-finite numbers, wrong sensor count, missing inputs).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed configuration: unknown terms or variables, bad
/// files, schema violations. Messages carry the offending file/key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bbfm
