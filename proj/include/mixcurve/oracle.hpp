#pragma once

#include <functional>

#include "mixcurve/mink.hpp"

namespace mixcurve::oracle {

/// Independent reference computations. Nothing here calls the pedal,
/// contrapedal or evolute formulas.

struct Line {
  MVec2 base;
  MVec2 direction;  // nonzero
};

/// Pseudo-orthogonal foot of q on the line: base + s·d with
/// s = <q − base, d> / <d, d>. Throws LightlikeLine when <d, d> = 0.
MVec2 foot_on_line(MVec2 q, const Line& line);

using CurveFn = std::function<MVec2(double)>;

/// Central finite differences of order 1, 2 or 3 with step halving from h0
/// and Richardson elimination of the even error terms. Returns once two
/// successive estimates agree to 1e-7 (relative to max(1, |estimate|)).
/// Throws NoConvergence if the step reaches 1e-7 first, or if round-off
/// takes over before the estimates settle.
MVec2 numeric_derivative(const CurveFn& f, double t, int order, double h0 = 1e-2);

enum class Side { Left, Right, Both };

/// Limit of f(t) as t -> t0, by Richardson extrapolation of
/// f(t0 ± h·2^-k), k = 0..20, h = 1e-2. Throws Divergent when the samples
/// grow without bound or the one-sided limits disagree beyond 1e-5.
MVec2 limit_estimate(const CurveFn& f, double t0, Side side);

}  // namespace mixcurve::oracle
