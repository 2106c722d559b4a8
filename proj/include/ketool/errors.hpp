#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ke {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition: empty family or subfamily,
/// overlapping subfamilies, an enumeration cap, a bad parameter.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A cross-check that is mathematically guaranteed to pass failed.
/// Always an implementation bug, never a property of the input.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ke
