#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blowup {

/// Bad user input: malformed scene files, unknown variables, violated
/// scene invariants. The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax error with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError(message + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Operands live in different rings (variable count or coefficient field).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A Groebner run exceeded the configured degree guardrail.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Exit status 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace blowup
