#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glvar {

/// Error thrown by the text parsers (partitions, tuples, polynomials).
/// `position` is a 0-based offset into the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Thrown when a Groebner computation exceeds its step budget.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("computation step budget exhausted") {}
};

} // namespace glvar
