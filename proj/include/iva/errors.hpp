#pragma once

#include <stdexcept>
#include <string>

namespace iva {

// Base class for all domain-level failures. Callers that only need a
// coarse success/failure split can catch this one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Interval construction with lo > hi, or an endpoint that is not finite.
class InvalidInterval : public Error {
public:
    using Error::Error;
};

// Argument outside the function's (or polynomial's) domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Two functions defined on different domains were combined.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

// Endpoint functions crossed (lower > upper) or produced non-finite values.
class InvalidFunction : public Error {
public:
    using Error::Error;
};

// delta <= 0 passed to a modulus query.
class InvalidDelta : public Error {
public:
    using Error::Error;
};

// Interval chain violates the length precondition of the cancellation law.
class MonotonicityViolation : public Error {
public:
    using Error::Error;
};

// Exponent search hit its cap without satisfying the requested conditions.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

// Greedy cover exceeded the configured center cap.
class CoverTooLarge : public Error {
public:
    using Error::Error;
};

// No admissible transition sharpness exists for the requested error budget.
class BudgetInfeasible : public Error {
public:
    using Error::Error;
};

// Length function is neither nonincreasing nor nondecreasing.
class NotMonotone : public Error {
public:
    using Error::Error;
};

// Sigmoid fit could not reach the requested budget within the term cap.
class FitBudgetExceeded : public Error {
public:
    FitBudgetExceeded(const std::string& msg, double best)
        : Error(msg), best_error(best) {}
    double best_error;
};

// Bound query on a function that carries neither an analytic modulus nor
// a Lipschitz constant.
class NoModulusAvailable : public Error {
public:
    using Error::Error;
};

// Expression text could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos, std::string expected)
        : Error(msg), position(pos), expected_tokens(std::move(expected)) {}
    std::size_t position;       // 0-based offset into the input text
    std::string expected_tokens;
};

// Parsed endpoint functions violate lower <= upper somewhere.
class EndpointOrderError : public Error {
public:
    EndpointOrderError(const std::string& msg, double x)
        : Error(msg), violating_x(x) {}
    double violating_x;
};

} // namespace iva
