#pragma once

#include <stdexcept>
#include <string>

namespace pelastica {

// Domain violations (inadmissible parameters, out-of-window inputs) use
// std::domain_error directly. The types below distinguish the two numerical
// failure modes callers may want to handle separately.

struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a - a_* is so small that the two curvature roots coincide to
// machine precision; the circle solution is the meaningful object there.
struct CircleDegenerateError : std::domain_error {
    explicit CircleDegenerateError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace pelastica
