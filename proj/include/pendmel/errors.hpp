#pragma once

#include <stdexcept>
#include <string>

namespace pendmel {

// Argument outside the mathematical domain of a function (k >= 1 for K,
// h on the separatrix, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroPolynomialError : public ArgumentError {
public:
    ZeroPolynomialError() : ArgumentError("operation undefined for the zero polynomial") {}
};

class EndpointRootError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IdenticallyZeroError : public std::runtime_error {
public:
    IdenticallyZeroError() : std::runtime_error("function is identically zero") {}
};

class BracketFailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroWronskianError : public std::runtime_error {
public:
    explicit ZeroWronskianError(int order)
        : std::runtime_error("Wronskian of order " + std::to_string(order) + " vanishes identically"),
          order_(order) {}
    int order() const noexcept { return order_; }

private:
    int order_;
};

// Raised when a zero count exceeds the theoretical bound that was supposed to
// hold for it. This is always a bug (numerical or symbolic), never user error.
class BoundViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pendmel
