#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcc {

// Base for all library errors. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text: signatures, catalog documents, family specs.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Structurally invalid data: catalog invariants, family constraints, unknown ids.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A constructed certificate failed its runtime check.
class VerificationError : public Error {
public:
    using Error::Error;
};

// A hard size guard was exceeded before any work was done.
class GuardError : public Error {
public:
    using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tcc
