#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nfacomp {

/// A construction exceeded its state or step budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::size_t limit)
        : std::runtime_error(what + " exceeded budget of " + std::to_string(limit)), limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

/// Malformed automaton file; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The gate method found no usable partition.
class NoGatePartition : public std::runtime_error {
public:
    NoGatePartition() : std::runtime_error("no gate partition") {}
};

} // namespace nfacomp
