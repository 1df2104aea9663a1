#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

/// Base class for all library errors. Messages are human-readable and
/// include the offending path / byte offset / value where applicable.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File I/O
struct MalformedHeader : Error { using Error::Error; };
struct UnsupportedMaxval : Error { using Error::Error; };
struct TruncatedPayload : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// Raster operations
struct ImageTooSmall : Error { using Error::Error; };
struct DegenerateHistogram : Error { using Error::Error; };

// Benchmarking
struct IncompatibleTruth : Error { using Error::Error; };

// Recognition harness
struct EmptyClass : Error { using Error::Error; };
struct UnreadableImage : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };

}  // namespace ssg
