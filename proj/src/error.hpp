#pragma once

#include <stdexcept>
#include <string>

namespace sfreecut {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vector/matrix sizes do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A stated precondition is violated (bad row index, non-facet row,
/// integral anchor point, non-S-free input, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// Malformed textual input; the message carries a position annotation.
struct ParseError : Error {
    using Error::Error;
};

/// An enumeration over an unbounded region was requested without a box.
struct UnboundedError : Error {
    using Error::Error;
};

} // namespace sfreecut
