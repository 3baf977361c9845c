#pragma once

#include <stdexcept>
#include <string>

namespace unitlift {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands do not share a descriptor, or a payload does not match its
// descriptor's shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A descriptor, chain, or precondition failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

// The element has no inverse in its ring.
class NotAUnitError : public Error {
public:
    using Error::Error;
};

// The request is outside the supported fragment (non-representable
// quotient, non-commutative determinant, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// An enumeration or size cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A postcondition assertion failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace unitlift
