#pragma once

#include <stdexcept>

namespace dsneg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A domain invariant was violated: bad masses, out-of-range probabilities,
/// malformed frames, and the like.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Values built over different frames were combined.
class FrameMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Negation is undefined over a one-element frame: the negated focal
/// element would be the empty set, which cannot carry mass.
class SingletonFrameError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// An input document does not have the expected shape.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace dsneg
