#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meroext {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry
struct CurvesIntersect : Error { using Error::Error; };
struct AmbiguousNesting : Error { using Error::Error; };
struct DegenerateCurve : Error { using Error::Error; };
struct SampleMismatch : Error { using Error::Error; };

// Cauchy machinery
struct ProbeTooClose : Error { using Error::Error; };
struct NoProbes : Error { using Error::Error; };
struct EvalAtPole : Error { using Error::Error; };

// Moments / Hankel
struct InsufficientMoments : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };

// Winding / probes
struct NearZero : Error { using Error::Error; };
struct Unresolved : Error { using Error::Error; };
struct AllTrialsInadmissible : Error { using Error::Error; };

// File / CLI input
struct InputError : Error { using Error::Error; };

}  // namespace meroext
