#pragma once

#include <stdexcept>
#include <string>

namespace fermiwell {

//! Argument outside the domain of an operation (bad well parameters, E outside the bound window, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

//! Iterative numerical procedure that failed to converge (series cap, quadrature budget, bisection).
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NoConvergence : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

//! Gamma-function pole hit (non-positive integer argument).
class PoleError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

//! Connection formula requested with c-a-b (numerically) an integer.
class DegenerateParameter : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

class QuadratureFailure : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

//! A computed result failed its own consistency check (parity labels, node counts, missing roots).
class VerificationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class BracketCollision : public VerificationError
{
public:
    using VerificationError::VerificationError;
};

class LabelingError : public VerificationError
{
public:
    using VerificationError::VerificationError;
};

class NotFound : public VerificationError
{
public:
    using VerificationError::VerificationError;
};

class NodeMismatch : public VerificationError
{
public:
    using VerificationError::VerificationError;
};

} // namespace fermiwell
