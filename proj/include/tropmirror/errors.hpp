#pragma once

#include <stdexcept>
#include <string>

namespace tropmirror {

// Caller violated a documented precondition (bad order, wrong variable, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal invariant failed. Signals a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Numerical routine did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropmirror
