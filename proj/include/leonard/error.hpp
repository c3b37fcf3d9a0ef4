#pragma once

#include <stdexcept>

namespace leonard {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed scalar text or system file.
struct ParseError : Error {
    using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// The characteristic polynomial does not split into d+1 distinct linear
/// factors over the ground field.
struct NotMultiplicityFreeError : Error {
    using Error::Error;
};

/// A consistency condition that valid inputs can never violate failed.
/// Seeing this exception means a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace leonard
