#pragma once

#include <stdexcept>
#include <string>

namespace cutoffwave {

// Problem statement violates the supported class (asymmetric movers,
// multi-peak packets, amplitudes at or above the cutoff, ...).
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unreadable configuration input.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cutoffwave
