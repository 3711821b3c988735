#pragma once

#include <stdexcept>

namespace besselq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (includes poles).
class DomainError : public Error {
public:
    using Error::Error;
};

// Result magnitude not representable as a finite double.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Series hit its term cap before meeting the stopping rule.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Alternating series evaluated where rounding swamps the result.
class CancellationError : public Error {
public:
    using Error::Error;
};

// Iterative scheme (continued fraction, root finder) failed its own test.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Denominator too close to zero to divide by.
class DivisionHazardError : public Error {
public:
    using Error::Error;
};

// Two evaluation routes disagree beyond the allowed bound.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace besselq
