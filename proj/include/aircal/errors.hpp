#pragma once

#include <stdexcept>
#include <string>

namespace aircal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or size mismatch between numeric arguments.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid configuration value (bad spec, empty grid, missing input path).
struct ConfigError : Error {
    using Error::Error;
};

// Unreadable or inconsistent input data.
struct DataError : Error {
    using Error::Error;
};

// Mismatched forward cache / model pair or similar stale-state misuse.
struct StateError : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Training loss went non-finite and stayed there.
struct DivergenceError : Error {
    using Error::Error;
};

}  // namespace aircal
