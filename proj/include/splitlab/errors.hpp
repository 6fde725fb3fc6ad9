#pragma once

#include <stdexcept>
#include <string>

namespace splitlab {

// Two vectors (or a vector and a cone) of different truncation levels met.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

// A documented precondition on an argument does not hold.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The active-set solver hit its iteration cap.
class NnlsNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two traces that are supposed to be comparable were produced from different setups.
class ConfigurationMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace splitlab
