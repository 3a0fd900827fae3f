#pragma once

#include <stdexcept>
#include <string>

namespace hf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (division by zero, bad shape, ...).
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested at a pole of psi / Gamma / harmonic continuation.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Exact backend cannot represent the requested value (wrong argument shape).
struct UnsupportedError : Error {
    using Error::Error;
};

// A ring product left the ln2^a * pi^b exponent box.
struct RingOverflowError : Error {
    using Error::Error;
};

struct UnknownIdentityError : Error {
    using Error::Error;
};

// Target enclosure width could not be reached within the refinement cap.
struct PrecisionError : Error {
    using Error::Error;
};

}  // namespace hf
