#pragma once

#include <stdexcept>
#include <string>

namespace toricsheaf {

// Vectors or subspaces living in different ambient spaces.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed fan data: bad ray, repeated ray, dependent cone rays, bad index.
class FanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Filtration jump lists that violate the bounded increasing convention.
class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition that the input data does not meet,
// e.g. a divisor that is not ample or a cone that is not smooth.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotAmpleError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Unparseable serialized input (JSON structure, rational literals).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace toricsheaf
