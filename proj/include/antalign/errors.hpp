#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antalign {

/// Caller supplied something the operation cannot accept.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric argument lies outside the domain an operation is defined on.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A statistic is undefined for the given sample (e.g. zero variance).
class UndefinedStatistic : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Text input could not be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace antalign
