#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An exact rational power was requested but the result is irrational.
class NotExactPower : public std::runtime_error {
public:
    explicit NotExactPower(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative summation did not reach its tolerance within the iteration cap.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qeuler
