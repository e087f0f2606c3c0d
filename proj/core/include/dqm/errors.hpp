#pragma once

#include <stdexcept>
#include <string>

namespace dqm {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// No bound spectrum exists: a = 0 and B = 0 leave nothing to confine with.
class DegenerateConfinement : public Error {
public:
    using Error::Error;
};

/// Inverse-square potential has no bound states without a magnetic field.
class CaseDNeedsField : public Error {
public:
    using Error::Error;
};

/// Quadrature could not reach the requested tolerance within its budget.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Momentum cutoff leaves too much density mass outside the integration window.
class TailMassExceeded : public Error {
public:
    using Error::Error;
};

/// Eigenvalue bisection could not isolate the requested level.
class BracketingFailure : public Error {
public:
    using Error::Error;
};

/// Richardson check between N and 2N grid points disagrees beyond tolerance.
class GridTooCoarse : public Error {
public:
    using Error::Error;
};

/// Flux derivative requested at the non-differentiable point Phi = ell.
class KinkPoint : public Error {
public:
    using Error::Error;
};

/// Linear-scale value requested where only the log form is representable.
class Overflow : public Error {
public:
    using Error::Error;
};

/// Convention calibration found no candidate within the residual budget.
class NoConventionMatches : public Error {
public:
    using Error::Error;
};

}  // namespace dqm
