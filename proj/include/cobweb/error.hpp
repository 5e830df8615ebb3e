#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad level range, k > n, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid construction input: bad preset parameter, malformed blocks.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Top level of the left operand and bottom level of the right differ.
class JoinError : public Error {
public:
    using Error::Error;
};

/// Operation refused for this input (e.g. closed forms on a non-cobweb).
class RefusedError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; the message names the offending path.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cobweb
