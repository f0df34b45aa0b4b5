#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walshlab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched sizes: wrong table length, wrong input width, mixed variable counts.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Argument outside its domain: non-binary table entry, non-bijective permutation, ...
class ValueError : public Error {
public:
    using Error::Error;
};

// Request exceeds a configured size ceiling.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Could not open or write a file.
class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input text; carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A guarantee that must hold with probability 1 failed. This always indicates
// a bug, never statistical noise.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace walshlab
