#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

// Base for everything this library throws on its own behalf.  Malformed
// external input (bad JSON, unparseable numbers) is reported with plain
// std::invalid_argument instead, so callers can tell "you gave me garbage"
// apart from "the math said no".
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated (point not on curve, wrong k for a
// pipeline, zero where nonzero is required, ...).
struct contract_error : error {
    using error::error;
};

// A quantity that must be a nonzero rational square is not one.  For the
// quartic-to-cubic transformation this is recoverable: shift the quartic to a
// known rational point first.
struct not_square_error : error {
    using error::error;
};

// The requested map is undefined at this particular point (point at infinity,
// y = 0, u = 0, t = 0).  Iteration over point multiples treats these as
// skippable, not fatal.
struct exceptional_point_error : error {
    using error::error;
};

// Exactness was supposed to be guaranteed and wasn't.  Always a bug.
struct internal_error : error {
    using error::error;
};

} // namespace dioph
