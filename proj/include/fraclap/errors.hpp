#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested at (or too close to) a pole of the gamma function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative scheme exhausted its budget before reaching the tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Operand sizes do not match.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A grid point does not line up with the lattice.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// A structural invariant failed to hold after construction.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace fraclap
