#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain (non-square input,
/// zero denominator, bad series constant term, ...).
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A coordinate block does not match the declared summand signatures.
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// A reduction formula was requested for a map that is not permutative and
/// squared by blocks.
class NotApplicable : public Error {
   public:
    using Error::Error;
};

/// The rational function is not an s-th power of a rational function.
class NotAPerfectPower : public Error {
   public:
    using Error::Error;
};

/// Input text could not be read or is not well-formed JSON.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// A well-formed document violates the map schema (missing fields, indices
/// out of range, duplicate coordinates, wrong declared permutation, ...).
class SchemaError : public Error {
   public:
    using Error::Error;
};

/// Two independent computation paths disagree. Never expected; indicates a bug.
class InternalCheckFailure : public Error {
   public:
    using Error::Error;
};

}  // namespace lefschetz
