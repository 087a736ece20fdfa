#pragma once

#include <stdexcept>
#include <string>

namespace lagcap {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (CLI exit status 2).
class InputError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition, e.g. a degenerate endpoint.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Sampling too coarse or a crossing that cannot be resolved numerically.
class NumericalDegeneracy : public Error {
public:
    using Error::Error;
};

// A quantity that must be integral (or otherwise exact) is not.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// A computed result contradicts a proved statement (CLI exit status 1).
class VerificationFailure : public Error {
public:
    using Error::Error;
};

// A structural rule on an input object is violated.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

// An integrated trajectory left its admissible range.
class TruncationError : public Error {
public:
    using Error::Error;
};

}  // namespace lagcap
