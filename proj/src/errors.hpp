#pragma once

#include <stdexcept>
#include <string>

namespace ssde {

// Invalid parameter or regime violation detected before any sampling starts.
struct ParamError : std::invalid_argument {
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// State argument outside the sampler's domain (e.g. negative x for a
// nonnegative process).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Run configuration that cannot be executed (stability bound violated,
// non-bracketing sweep range, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Operation not available for the given model/scheme combination.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure at run time (implicit stage divergence, overflow, ...).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ssde
