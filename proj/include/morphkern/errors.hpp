#pragma once

#include <stdexcept>
#include <string>

namespace morphkern {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration, flags, or malformed in-memory values.
struct InvalidArgument : Error {
    using Error::Error;
};

// Interpolation was asked to run with zero samples.
struct EmptySamples : Error {
    EmptySamples() : Error("interpolation requires at least one sample") {}
};

// LOOCV tuning needs two or more samples.
struct TooFewSamples : Error {
    using Error::Error;
};

// Feature dimension disagreement between inputs.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Two grids with different geometry were compared.
struct GeometryMismatch : Error {
    using Error::Error;
};

// (I + gamma*L*K) could not be factorized at usable accuracy.
struct SingularSystem : Error {
    using Error::Error;
};

// Rejection sampling failed to hit a region polygon.
struct RejectionOverflow : Error {
    using Error::Error;
};

// Malformed input file; the message carries file and line context.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace morphkern
