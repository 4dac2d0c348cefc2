#pragma once

#include <stdexcept>
#include <string>

namespace sbpg {

/// Raised when a configuration (plant file, experiment file, grid, dimension)
/// is malformed or inconsistent.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error("config error: " + what) {}
};

/// Raised when a policy is queried before any cell of its map was visited.
class PolicyNotReady : public std::runtime_error {
 public:
  explicit PolicyNotReady(const std::string& what)
      : std::runtime_error("policy not ready: " + what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error("i/o error: " + what) {}
};

}  // namespace sbpg
