#pragma once

#include <stdexcept>

namespace pcgmub {

/// Base type for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gaussian width sigma <= 0.
struct NonPositiveWidth : Error {
    using Error::Error;
};

/// Gaussian envelope has not decayed below tolerance at the grid edges.
struct EnvelopeClipped : Error {
    using Error::Error;
};

/// |sin(delta theta)| too small for the fractional Fourier kernel.
struct DegenerateAngle : Error {
    using Error::Error;
};

/// Mask index outside [0, d).
struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Mask projection annihilates the state.
struct EmptyProjection : Error {
    using Error::Error;
};

/// m fails the admissibility rule of the unbiasedness condition.
struct InvalidM : Error {
    using Error::Error;
};

/// Angle configuration excluded by the consistency-condition case analysis.
struct ExcludedAngle : Error {
    using Error::Error;
};

/// Physical parameter outside its admissible range.
struct OutOfRange : Error {
    using Error::Error;
};

/// Relative entropy undefined: P puts mass where Q has none.
struct AbsoluteContinuityViolated : Error {
    using Error::Error;
};

/// Statistic of an empty sample requested.
struct EmptySample : Error {
    using Error::Error;
};

}  // namespace pcgmub
