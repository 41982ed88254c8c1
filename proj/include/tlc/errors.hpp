#pragma once

#include <stdexcept>
#include <string>

namespace tlc {

// Invalid argument values (out-of-range parameters, bad time, bad grid size).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A prescription that no physical state / field can realize (C^2 < 0,
// purity violation, steady state that does not exist).
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// The inversion formula has a genuine pole: C -> 0 while the population
// drive does not vanish, or a population crossing with nonzero phase slope.
struct SingularFieldError : std::runtime_error {
    SingularFieldError(const std::string& what, double t_lo, double t_hi)
        : std::runtime_error(what), t_lo(t_lo), t_hi(t_hi) {}
    double t_lo;
    double t_hi;
};

// Numerical propagation left the physical state space.
struct IntegrationError : std::runtime_error {
    IntegrationError(const std::string& what, double t_fail)
        : std::runtime_error(what), t_fail(t_fail) {}
    double t_fail;
};

// Requested an evaluation path that is not available (e.g. a profile with
// no closed form while quadrature is disabled).
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Bad experiment configuration (unknown key, missing key, wrong type).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tlc
