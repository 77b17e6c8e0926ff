#pragma once

#include <stdexcept>
#include <string>

namespace phimet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input value outside the admissible range of a family (e.g. a
// multiplicative weight below 1) or an invalid numeric construction.
class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class UnsupportedTransform : public Error {
public:
    using Error::Error;
};

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class DuplicateEdge : public ParseError {
public:
    using ParseError::ParseError;
};

class SelfLoop : public ParseError {
public:
    using ParseError::ParseError;
};

class NegativeWeight : public ParseError {
public:
    using ParseError::ParseError;
};

class InvalidPath : public Error {
public:
    using Error::Error;
};

class NotMetrizable : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace phimet
