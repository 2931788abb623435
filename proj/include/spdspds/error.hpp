#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spdspds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A variable with lower bound above its upper bound.
class InfeasibleBoundsError : public Error {
public:
    InfeasibleBoundsError(std::string variable, double lower, double upper);

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

/// Vectors or matrices whose dimensions do not agree.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Pivot requested on a cell whose magnitude is within the sign tolerance.
class ZeroPivotError : public Error {
public:
    ZeroPivotError(std::size_t row, std::size_t col, double value);
};

/// classify_terminal called on a tableau that still admits a pivot.
class NotTerminalError : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration requested beyond its combinatorial guard.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// Malformed LP data (undeclared variable, bad relation, ...).
class ModelError : public Error {
public:
    using Error::Error;
};

/// Failure while reading an MPS document. Carries the 1-based line number.
class MpsError : public Error {
public:
    enum class Kind {
        unknown_section,
        duplicate_row,
        undeclared_reference,
        malformed_number,
        malformed_record,
        io,
    };

    MpsError(Kind kind, std::size_t line, const std::string& detail);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

const char* to_string(MpsError::Kind kind) noexcept;

}  // namespace spdspds
