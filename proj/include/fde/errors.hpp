#pragma once

#include <stdexcept>
#include <string>

namespace fde {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side contract was violated (bad size, value out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation produced a non-finite value or failed to converge.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// A structured factor is singular (zero pivot, zero tau sample, zero circulant eigenvalue).
class SingularOperator : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

/// Dense materialization requested above the configured order cap.
class DenseCapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace fde
