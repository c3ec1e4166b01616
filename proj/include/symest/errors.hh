// errors.hh -- exception types shared across the library
#ifndef SYMEST_ERRORS_HH_
#define SYMEST_ERRORS_HH_

#include <stdexcept>
#include <string>

namespace symest {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text: JSON syntax, expression syntax.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally well-formed input that violates an invariant or precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Expression evaluation failed (division by zero, non-finite result).
class EvalError : public Error {
public:
    using Error::Error;
};

/// A product-form trace set is too large to materialize.
class MaterializeLimitError : public Error {
public:
    using Error::Error;
};

} // namespace symest

#endif
