#pragma once

#include <stdexcept>
#include <string>

namespace pretend {

// Base of every library error. The CLI maps all of these to exit status 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A size or range limit of a table or group was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// A certified evaluation cannot reach the requested truncation radius.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Dirichlet deconvolution by a sequence whose first term is not 1.
class NonInvertibleError : public Error {
public:
    using Error::Error;
};

// Malformed textual input (function syntax, character syntax, grid syntax).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace pretend
