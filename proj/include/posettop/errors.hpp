#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posettop {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (poset files, loop literals, JSON payloads).
struct ParseError : Error {
    using Error::Error;
};

/// The given relation pairs imply x < x for some element.
struct CycleDetected : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct DuplicateLabel : Error {
    using Error::Error;
};

/// Raised by degree() when the poset has maximal chains of mixed length.
struct NotHomogeneous : Error {
    using Error::Error;
};

struct BasepointMismatch : Error {
    using Error::Error;
};

/// A grid map that violates the product-fence order.
struct NonMonotoneInput : Error {
    using Error::Error;
};

/// homology_from_boundaries received matrices whose composition is nonzero.
struct NotAComplex : Error {
    using Error::Error;
};

struct NotConnected : Error {
    using Error::Error;
};

/// An enumeration exceeded its configured size cap. Carries the cap and the
/// count reached when enumeration stopped.
struct CapExceeded : Error {
    std::size_t cap;
    std::size_t partial_count;

    CapExceeded(std::size_t cap_, std::size_t partial)
        : Error("enumeration cap exceeded: cap=" + std::to_string(cap_) +
                ", reached=" + std::to_string(partial)),
          cap(cap_),
          partial_count(partial) {}
};

/// A checked internal identity failed (e.g. a Hurewicz chain with nonzero
/// boundary). Signals a bug, never expected on valid inputs.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

}  // namespace posettop
