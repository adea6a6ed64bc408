#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Raised when an argument lies outside the domain of an operation
/// (malformed word, missing factor, permutation outside a map's domain).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised before any work is done when an exhaustive computation exceeds
/// its size budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace permlab
