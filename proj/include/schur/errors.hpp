#pragma once
// Error types shared across the library. Callers that feed user input
// (CLI, config) catch these and turn them into diagnostics.

#include <stdexcept>

namespace schur {

// A closed-form function was called outside the hypotheses that make its
// formula valid.
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive search would exceed the configured size cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The coefficient a is outside the family a formula is known for.
struct UnsupportedCoefficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad (s, t, a) arguments for the continuous-area functions.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The point satisfies none of the catalogued condition combinations.
struct UnlistedRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two catalogued regions matched strictly off their boundaries; the
// condition table would be broken, so this must never fire.
struct AmbiguousRegion : std::logic_error {
    using std::logic_error::logic_error;
};

// Numeric differentiation was requested too close to a region boundary
// for the stencil to stay on one polynomial piece.
struct OnBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reference data file is required for the requested range but missing.
struct MissingReference : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace schur
