#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rkhsinfo {

// An argument violates an operation's preconditions (bad dimensions,
// out-of-range parameters, mismatched kernels, ...).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that is degenerate for the requested operation
// (zero variance, collinear design, ...).
class degenerate_input : public std::runtime_error {
public:
    explicit degenerate_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A result that should be impossible for valid inputs, e.g. a squared norm
// far below zero. Signals kernel misuse or a numerical bug, not bad data.
class numerical_failure : public std::runtime_error {
public:
    explicit numerical_failure(const std::string& msg) : std::runtime_error(msg) {}
};

// CSV ingestion failure; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace rkhsinfo
