#pragma once

#include <stdexcept>
#include <string>

namespace divlat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value does not fit the configured integer bound.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A node, arc or DP budget was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An operation was given a graph of the wrong kind.
class KindError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent input (bad signature, mismatched graphs, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Forbidden combination of otherwise valid arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Unparseable text input; carries the 1-based line number.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace divlat
