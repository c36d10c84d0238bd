#pragma once

#include <stdexcept>
#include <string>

namespace sindyae {

// Error taxonomy mirrored by the CLI exit codes:
// usage/dimension -> 1, config -> 2, data -> 3, numeric -> 4.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : UsageError {
  explicit DimensionError(const std::string& msg) : UsageError(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sindyae
