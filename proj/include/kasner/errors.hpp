#pragma once

#include <stdexcept>
#include <string>

namespace kasner {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Geometry collapsed below tolerance (zero area, coincident vertices, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Input polygon is not strictly convex / positively oriented.
class ConvexityError : public Error {
public:
    using Error::Error;
};

/// Requested quantity does not exist for the given arguments.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Operation requires a polygon with a specific vertex count.
class WrongArityError : public Error {
public:
    using Error::Error;
};

/// A proved inequality failed numerically; indicates a bug or a tolerance
/// problem, never a genuine counterexample.
class LemmaViolationError : public Error {
public:
    using Error::Error;
};

/// An extremal construction could not be completed within its retry budget.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Optimizer found no feasible starting point.
class BudgetExhaustedError : public Error {
public:
    using Error::Error;
};

/// Random generator failed to produce a valid sample within its retry budget.
class RetryExhaustedError : public Error {
public:
    using Error::Error;
};

}  // namespace kasner
