#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltasets {

/// Malformed input: bad ids, self-loops, unparsable graph files.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A graph file could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exponential routine was asked to run above its configured size guard.
class LimitError : public std::runtime_error {
public:
    LimitError(const std::string& what, std::size_t requested, std::size_t limit)
        : std::runtime_error(what), requested_(requested), limit_(limit) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

/// A precondition of a checked inequality was not met (e.g. k > r).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace deltasets
