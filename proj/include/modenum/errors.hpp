#pragma once

#include <stdexcept>
#include <string>

namespace modenum {

/// Base class for precondition violations reachable from user input.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// poly_rem / divide_exact require a monic modulus.
class NonMonicModulus : public DomainError {
public:
    using DomainError::DomainError;
};

/// invariant_equal only accepts integer-coefficient polynomials.
class NonIntegralInput : public DomainError {
public:
    using DomainError::DomainError;
};

class EmptyWord : public DomainError {
public:
    using DomainError::DomainError;
};

class NotFlatNonDyck : public DomainError {
public:
    using DomainError::DomainError;
};

class LengthNotDivisible : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed polynomial or word text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A division that is mathematically guaranteed to be exact left a
/// remainder.  Reaching this means the implementation is wrong.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A count that is mathematically guaranteed to be a non-negative integer
/// came out fractional or negative.  Also signals an implementation bug.
class NonIntegerResult : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace modenum
