#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mixcurve/associated.hpp"
#include "mixcurve/parallel.hpp"

namespace mixcurve {

/// Everything reported for one parameter of a sampled curve.
struct SampleRow {
  double t = 0.0;
  MVec2 base;
  CausalType base_class = CausalType::Lightlike;
  EvaluatedPoint cpe;
  EvaluatedPoint pe;
  std::optional<MVec2> ev;  // absent where the evolute is undefined
};

/// n parameters spaced uniformly over [lo, hi], endpoints included; n >= 2.
std::vector<double> uniform_parameters(Interval domain, int n);

SampleRow sample_row(const ParametricCurve& c, MVec2 q, double t);

/// One row per parameter, in the order given. Serial and parallel execution
/// produce identical tables.
std::vector<SampleRow> sample_rows(const ParametricCurve& c, MVec2 q, std::span<const double> ts,
                                   Execution exec = Execution::Parallel);

/// Positions of an associated curve over a parameter grid; nullopt where the
/// point is asymptotic or undefined.
enum class Associated { Contrapedal, Pedal, Evolute };
std::vector<std::optional<MVec2>> sample_positions(const ParametricCurve& c, Associated which, MVec2 q,
                                                   std::span<const double> ts,
                                                   Execution exec = Execution::Parallel);

}  // namespace mixcurve
