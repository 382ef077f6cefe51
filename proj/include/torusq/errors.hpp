// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace torusq {

// Error taxonomy used across the library.  The CLI maps each class to a
// distinct exit code.

// A caller violated a documented precondition (grid too small, k < 1, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed or non-finite input data (bad symbol file, NaN samples, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A symbol or matrix was passed in the wrong frame/basis.
struct FrameError : std::logic_error {
    using std::logic_error::logic_error;
};

// Input outside the mathematical domain of the operation (for example a
// function that does not satisfy the required quasi-periodicity laws).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadrature refinement failed to converge to the requested accuracy.
struct AccuracyError : std::runtime_error {
    AccuracyError(const std::string& what, double achieved, double requested)
        : std::runtime_error(what), achieved(achieved), requested(requested) {}
    double achieved;
    double requested;
};

}  // namespace torusq
