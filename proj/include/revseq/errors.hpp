#pragma once

/// @file errors.hpp
/// @brief Exception types shared across the toolkit.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revseq {

/// Base type for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bit-vector width does not match what an operation expects.
class WidthError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured cap.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

/// An input bit differs from the constant declared for its wire.
class ConstantError : public Error {
public:
    using Error::Error;
};

/// A cost evaluation or expansion referenced an unknown symbol.
class CostError : public Error {
public:
    using Error::Error;
};

/// Netlist concatenation failed: bad wire map or name collision.
class ConcatError : public Error {
public:
    using Error::Error;
};

/// Netlist text could not be parsed; carries a 1-based location.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace revseq
