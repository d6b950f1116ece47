#ifndef APXALG_ERROR_HPP
#define APXALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace apxalg {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call parameters: out-of-range epsilon, zero n where n >= 1 is
// required, oracle cap exceeded.  Maps to the CLI usage exit code.
struct usage_error : error {
    using error::error;
};

// Scenario or document content that fails contract validation:
// duplicate points, non-positive coefficients, b1 not a member of
// graded piece 1, malformed scenario JSON.
struct validation_error : error {
    using error::error;
};

// A broken internal invariant (e.g. a superadditivity violation
// surfacing as a non-exact polynomial division).  Always a bug.
struct internal_error : error {
    using error::error;
};

}  // namespace apxalg

#endif
