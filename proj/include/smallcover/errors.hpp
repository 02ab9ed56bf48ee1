#pragma once

#include <stdexcept>
#include <string>

namespace smallcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a structural invariant (zero vector, non-simple vertex, ...).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed JSON that does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// No candidate vector keeps the vertices created by a truncation non-singular.
class NoVectorFound : public Error {
public:
    using Error::Error;
};

}  // namespace smallcover
