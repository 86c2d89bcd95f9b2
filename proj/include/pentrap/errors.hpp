#pragma once

#include <stdexcept>
#include <string>

namespace pentrap {

// Malformed or contradictory user input (config files, CLI arguments, bitstrings).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Physically invalid regime: no confining well, unstable trap, uncoupled pair,
// infeasible optimization bounds.
struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numerical procedure failed to converge.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pentrap
