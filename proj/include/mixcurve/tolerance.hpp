#pragma once

namespace mixcurve::tol {

// Relative band for <u,u> / |u|^2 (and analogous scaled zero tests).
inline constexpr double kLightlike = 1e-9;
inline constexpr double kIdentity = 1e-9;
inline constexpr double kDerivative = 1e-6;
inline constexpr double kLimit = 1e-5;
// |alpha| + |beta| below this is treated as a stationary point.
inline constexpr double kRegularity = 1e-12;
// Bisection target and duplicate-merge distance for parameter events.
inline constexpr double kEventStep = 1e-12;
inline constexpr double kEventMerge = 1e-10;

}  // namespace mixcurve::tol
