#pragma once

#include <stdexcept>
#include <string>

namespace ptiles {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input value: non-prime base, mixed primes, bad cardinality, overflow.
struct DomainError : Error {
    using Error::Error;
};

// The requested result is not determined by the digits that are known.
struct PrecisionError : Error {
    using Error::Error;
};

// A majority vote over a cell came out exactly even, so no side wins.
struct AmbiguousCellError : Error {
    using Error::Error;
};

// Input text does not match the expected JSON shape (missing or mistyped
// keys). Distinct from DomainError so the CLI can report it as usage.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace ptiles
