#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locol {

/// Malformed arguments: loops, out-of-range endpoints, bad colorings.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text input that does not follow the edge-list or JSON schemas.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exponential search was asked to run on an input above its size guard.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// The operation is undefined on this input (e.g. color codes of a disconnected graph).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A construction's documented precondition does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A construction produced a coloring the verifier rejects.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace locol
