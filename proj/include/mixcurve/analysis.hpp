#pragma once

#include <string_view>
#include <vector>

#include "mixcurve/curve.hpp"
#include "mixcurve/mink.hpp"
#include "mixcurve/parallel.hpp"

namespace mixcurve {

/// Lightcone coefficients of the velocity, gamma' = alpha·L⁺ + beta·L⁻,
/// with their first two derivatives.
struct TangentialData {
  double alpha = 0.0;
  double beta = 0.0;
  double dalpha = 0.0;
  double dbeta = 0.0;
  double ddalpha = 0.0;
  double ddbeta = 0.0;
  MVec2 gamma;
  MVec2 dgamma;

  MVec2 ddgamma() const { return from_lightcone({dalpha, dbeta}); }
  MVec2 dddgamma() const { return from_lightcone({ddalpha, ddbeta}); }
  /// gamma'^⊥ = alpha·L⁺ − beta·L⁻.
  MVec2 normal() const { return perp(dgamma); }
  /// dalpha·beta − alpha·dbeta; vanishes exactly at inflections.
  double inflection_value() const { return dalpha * beta - alpha * dbeta; }
  /// ddalpha·beta − alpha·ddbeta, the derivative of inflection_value.
  double inflection_rate() const { return ddalpha * beta - alpha * ddbeta; }
  /// |gamma'|² in the Euclidean sense, = 2(alpha² + beta²).
  double speed_sq() const { return 2.0 * (alpha * alpha + beta * beta); }
};

enum class Inflection { None, Inflection, Ordinary };

struct PointClass {
  CausalType causal;
  Inflection inflection;
};

enum class EventKind { LightlikePoint, Inflection, OrdinaryInflection };
enum class Branch { AlphaZero, BetaZero, NotApplicable };

std::string_view to_string(EventKind k);
std::string_view to_string(Branch b);

/// A distinguished parameter. When a lightlike point is also an inflection the
/// two merge into one event carrying the inflection kind and the lightlike branch.
struct ParamEvent {
  double t;
  EventKind kind;
  Branch branch;
};

inline constexpr int kDefaultGrid = 2048;

/// Throws RegularityError when gamma' vanishes (|alpha| + |beta| below tolerance).
TangentialData tangential_data(const ParametricCurve& c, double t);
TangentialData tangential_data(const CurveJet& j);

bool is_lightlike(const TangentialData& td);
/// Which lightcone coefficient vanishes at a lightlike point.
Branch lightlike_branch(const TangentialData& td);
bool is_inflection(const TangentialData& td);
bool is_ordinary_inflection(const TangentialData& td);

PointClass classify_point(const ParametricCurve& c, double t);

/// Locate lightlike points and inflections on the domain of c.
///
/// Sign changes of alpha, beta and the inflection value are bracketed on a
/// uniform grid of grid_n cells and bisected to kEventStep. Zeros of alpha or
/// beta without a sign change are found from local minima of |alpha|, |beta|
/// by bisecting the derivative. Events closer than kEventMerge are merged.
std::vector<ParamEvent> find_events(const ParametricCurve& c, int grid_n = kDefaultGrid,
                                    Execution exec = Execution::Parallel);

}  // namespace mixcurve
