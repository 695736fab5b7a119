#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

// Base of every error raised by the library. The subclasses map onto the
// failure kinds callers are expected to tell apart (the CLI turns them into
// exit codes).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes or dimensions that do not fit together.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A requested object would exceed the configured size guard.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A numerical procedure did not reach its tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Input data violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// The request is well formed but outside what is implemented.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A closed-form evaluator was called outside its hypothesis.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace qgw
