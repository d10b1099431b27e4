#pragma once

#include <stdexcept>
#include <string>

namespace posetcodes {

// Root of every library error. Each subclass names one failure mode so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class RankError : public Error {
public:
    using Error::Error;
};

class ChainConditionUnsatisfied : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when an exhaustive enumeration would exceed the configured budget.
/// `dimension()` is the subspace dimension r that tripped the guard, or 0 when
/// the guard fired on a codeword or census enumeration.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, int dimension = 0)
        : Error(what), dimension_(dimension) {}

    int dimension() const noexcept { return dimension_; }

private:
    int dimension_;
};

} // namespace posetcodes
