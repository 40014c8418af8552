#pragma once

#include <stdexcept>
#include <string>

namespace marvel {

// Index-range problems use std::out_of_range and malformed arguments use
// std::invalid_argument. The types below cover the remaining failure kinds.

/// A numerical routine could not produce a trustworthy answer
/// (e.g. a singular correlation submatrix).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was applied to state that does not allow it
/// (e.g. removing a variable twice).
class StateError : public std::logic_error {
public:
    explicit StateError(const std::string& what) : std::logic_error(what) {}
};

/// Input exceeds what an exhaustive routine is willing to enumerate.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Orientation propagation found contradictory forced orientations.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace marvel
