#pragma once

#include <stdexcept>
#include <string>

namespace harmonic_zeros {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (rational specs, complex literals, CLI values).
class ParseError : public Error {
public:
    using Error::Error;
};

class IOError : public Error {
public:
    using Error::Error;
};

// Parameters outside a constructor's admissible domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numerical failures. The CLI maps every subclass to exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// p(z) and q(z) vanish together: the rational function was not reduced.
class IndeterminateValue : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateResult : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularPoint : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class PoleEvaluation : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Zeros of r(z) - conj(z) are not isolated (r o conj r is the identity).
class DegenerateZeroSet : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class OnCurveZero : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class RefinementExhausted : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IsolationFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotAZero : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace harmonic_zeros
