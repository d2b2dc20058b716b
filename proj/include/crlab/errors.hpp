#pragma once

#include <stdexcept>

namespace crlab {

// Caller misuse: bad arguments, shape mismatches, malformed input documents.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid request: inverting zero, an isotropic form where a
// nonisotropic one is required, no rank-r element to normalize at, ...
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured cap (CRLAB_MAX_ENUM or an
// explicit override).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified computation contradicted a structural fact that holds for every
// valid input.  Either the input violated a precondition that was asserted by
// the caller, or the instance falsifies the theory outside its hypotheses;
// the message carries the offending data.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace crlab
