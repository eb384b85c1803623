#pragma once

#include <stdexcept>
#include <string>

namespace hcenter {

// Base class for all recoverable computation errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid mathematical input: malformed partition, size mismatch, index out
// of range, evaluation outside a function's domain.
struct DomainError : Error {
    using Error::Error;
};

// A diagram word violates a slice invariant: wrong boundary signs, position
// out of range, dot on a downward strand, or a closed diagram was required.
struct DiagramError : Error {
    using Error::Error;
};

// Interpolation received values inconsistent with any shifted symmetric
// function of the requested degree.
struct InterpolationError : Error {
    using Error::Error;
};

// The heuristic degree bound failed verification even after the retry; the
// message names a partition where interpolant and functor value disagree.
struct DegreeBoundError : Error {
    using Error::Error;
};

// The shifted Schur determinant evaluation hit a vanishing denominator
// (repeated shifted arguments), which is reported distinctly from a plain
// domain error.
struct DeterminantError : Error {
    using Error::Error;
};

}  // namespace hcenter
