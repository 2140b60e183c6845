#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mixcurve/analysis.hpp"
#include "mixcurve/curve.hpp"
#include "mixcurve/mink.hpp"

namespace mixcurve {

enum class QIncidence { Coincident, OnTangentLine, OnNormalLine, Generic };
enum class PointStatus { Regular, Singular, LimitValue, Asymptotic };
enum class LightDirection { LPlus, LMinus };

std::string_view to_string(QIncidence q);
std::string_view to_string(PointStatus s);
std::string_view to_string(LightDirection d);

inline MVec2 direction_vector(LightDirection d) { return d == LightDirection::LPlus ? kLPlus : kLMinus; }

/// Escape of an associated curve along a lightlike line. The signs give the
/// orientation of the escape (+1 along the direction, -1 against it, 0 if
/// undetermined) as t approaches the lightlike parameter from each side.
struct Asymptote {
  LightDirection direction;
  int sign_right = 0;
  int sign_left = 0;
};

struct EvaluatedPoint {
  double t = 0.0;
  std::optional<MVec2> position;  // absent iff status == Asymptotic
  PointStatus status = PointStatus::Regular;
  std::optional<Asymptote> asymptote;
  std::optional<CausalType> causal;
};

struct OmegaValue {
  double omega;
  double self_product;  // <CPe', CPe'> computed from cpe_derivative
};

/// Coefficients of CPe' in the lightcone frame: CPe' = first·L⁺ + second·L⁻.
struct CpeCoefficients {
  double first;
  double second;
  double first_scale;  // magnitudes of the summands, for scaled zero tests
  double second_scale;
};

QIncidence q_incidence(const ParametricCurve& c, MVec2 q, double t);
QIncidence q_incidence(const TangentialData& td, MVec2 q);

/// Foot of q on the normal line; lightlike parameters use the limiting value
/// when q is coincident with or on the tangent line of the base point, and are
/// reported asymptotic otherwise.
EvaluatedPoint contrapedal(const ParametricCurve& c, MVec2 q, double t);

/// Foot of q on the tangent line, with the same lightlike handling.
EvaluatedPoint pedal(const ParametricCurve& c, MVec2 q, double t);

/// gamma − (2αβ/(α'β − αβ'))·(αL⁺ − βL⁻). Throws EvoluteUndefined at lightlike
/// points and inflections.
EvaluatedPoint evolute(const ParametricCurve& c, double t);
bool evolute_defined(const TangentialData& td);

/// Limit of the contrapedal (and pedal) at a lightlike point whose tangent
/// line contains q: gamma − ¼<q − gamma, L⁻>L⁺ when beta vanishes, and
/// gamma − ¼<q − gamma, L⁺>L⁻ when alpha vanishes.
MVec2 lightlike_limit_value(const TangentialData& td, MVec2 q);

CpeCoefficients cpe_coefficients(const TangentialData& td, MVec2 q);
MVec2 cpe_derivative(const ParametricCurve& c, MVec2 q, double t);
bool is_cpe_singular(const ParametricCurve& c, MVec2 q, double t);
OmegaValue omega(const ParametricCurve& c, MVec2 q, double t);

/// Causal type of the contrapedal point. nullopt when the point is singular
/// or sits at a lightlike inflection that is not ordinary, where no
/// classification rule applies. Throws NotApplicable in the asymptotic case.
std::optional<CausalType> classify_cpe_point(const ParametricCurve& c, MVec2 q, double t);

/// The evolute of a DSL curve as a curve in its own right. Its order-3 jets
/// come from evaluating the evolute formula in jet arithmetic on order-5 jets
/// of the base curve.
class EvoluteCurve final : public ParametricCurve {
 public:
  explicit EvoluteCurve(CurveDef base) : base_(std::move(base)) {}
  Interval domain() const override { return base_.domain(); }
  CurveJet jet(double t) const override;
  std::string name() const override { return "evolute of " + base_.name(); }

 private:
  CurveDef base_;
};

struct IdentityReport {
  std::vector<double> deviations;  // Euclidean |Pe(Ev)(t) − CPe(t)| per parameter
  double max_deviation = 0.0;
};

/// Pedal of the evolute against the contrapedal of the base curve.
IdentityReport verify_pedal_evolute_identity(const CurveDef& c, MVec2 q, std::span<const double> ts);

/// True when the curve has no lightlike event or q is coincident with, or on
/// the tangent line of, at least one of them.
bool satisfies_incidence_hypothesis(const ParametricCurve& c, MVec2 q,
                                    const std::vector<ParamEvent>& events);

}  // namespace mixcurve
