#pragma once

#include <stdexcept>
#include <string>

namespace hitpaths {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a structural constraint.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotAPath : public Error {
public:
    using Error::Error;
};

class NotATree : public Error {
public:
    using Error::Error;
};

class NotASubtree : public Error {
public:
    using Error::Error;
};

class ClauseTooWide : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class TooFewEdges : public Error {
public:
    using Error::Error;
};

class InfeasibleConfig : public Error {
public:
    using Error::Error;
};

// Raised when a property guaranteed by construction fails to hold. Any
// occurrence is a bug in this library, never a property of the input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ContiguityViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

class FlowerShapeViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

}  // namespace hitpaths
