#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument or a parameter does not hold.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two grid functions that must share a discretization do not.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// A pointwise rule produced a NaN or an infinity.
class NonFiniteSample : public Error {
public:
    NonFiniteSample(std::size_t index, double point)
        : Error("non-finite sample at node " + std::to_string(index) + " (x = " + std::to_string(point) + ")"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A quadrature could not certify its result: a truncated tail or a support edge is above tolerance.
class NumericalRejection : public Error {
public:
    using Error::Error;
};

}  // namespace specres
