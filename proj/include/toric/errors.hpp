#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class ToricError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked 64-bit operation would have wrapped.
class OverflowError : public ToricError {
public:
    using ToricError::ToricError;
};

class DimensionError : public ToricError {
public:
    using ToricError::ToricError;
};

/// Constructor precondition of a configuration failed (zero column, bad grading, ...).
class InvalidConfiguration : public ToricError {
public:
    using ToricError::ToricError;
};

/// A consumer needed a complete fiber but enumeration stopped at its cap.
class TruncatedFiber : public ToricError {
public:
    using ToricError::ToricError;
};

/// A configurable resource budget (completion size, box volume, wall time) ran out.
class BudgetExceeded : public ToricError {
public:
    using ToricError::ToricError;
};

class ParseError : public ToricError {
public:
    using ToricError::ToricError;
};

} // namespace toric
