#pragma once

#include <stdexcept>
#include <string>

namespace contextqa {

/// Malformed user-supplied data: corpus rows, test files, empty inputs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unusable configuration: missing vocab file, incomplete backend config.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A backend call failed for good (retries exhausted, fixture miss).
class BackendError : public std::runtime_error {
 public:
  explicit BackendError(const std::string& message, int attempts = 1)
      : std::runtime_error(message), attempts_(attempts) {}

  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

/// The backend answered but the payload violates the wire contract
/// (wrong dimension, non-numeric values, missing fields). Never retried.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void log_warning(const std::string& message);

}  // namespace contextqa
