#include "mixcurve/associated.hpp"

#include <algorithm>
#include <cmath>

#include "mixcurve/errors.hpp"
#include "mixcurve/tolerance.hpp"

namespace mixcurve {

std::string_view to_string(QIncidence q) {
  switch (q) {
    case QIncidence::Coincident:
      return "coincident";
    case QIncidence::OnTangentLine:
      return "on_tangent_line";
    case QIncidence::OnNormalLine:
      return "on_normal_line";
    case QIncidence::Generic:
      return "generic";
  }
  return "?";
}

std::string_view to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Regular:
      return "regular";
    case PointStatus::Singular:
      return "singular";
    case PointStatus::LimitValue:
      return "limit_value";
    case PointStatus::Asymptotic:
      return "asymptotic";
  }
  return "?";
}

std::string_view to_string(LightDirection d) { return d == LightDirection::LPlus ? "L+" : "L-"; }

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

bool near_zero(double v, double scale) { return std::abs(v) <= tol::kLightlike * scale; }

// Signs of a lightcone coefficient f just right and just left of a zero,
// from its first and second derivatives.
std::pair<int, int> side_signs(double df, double ddf, double scale) {
  if (!near_zero(df, scale)) return {sign_of(df), -sign_of(df)};
  return {sign_of(ddf), sign_of(ddf)};
}

// Asymptote of an associated curve at a lightlike point with generic q.
// `orientation` is +1 for the contrapedal and -1 for the pedal, whose
// divergent lightcone component has the opposite sign.
Asymptote asymptote_at(const TangentialData& td, MVec2 q, int orientation) {
  const MVec2 w = q - td.gamma;
  const double accel = euclid_norm(td.ddgamma()) + euclid_norm(td.dddgamma());
  Asymptote a;
  if (lightlike_branch(td) == Branch::BetaZero) {
    // divergent term alpha·<w,L⁺>/(4 beta) along L⁺
    a.direction = LightDirection::LPlus;
    const int num = orientation * sign_of(td.alpha * pseudo_dot(w, kLPlus));
    auto [right, left] = side_signs(td.dbeta, td.ddbeta, accel);
    a.sign_right = num * right;
    a.sign_left = num * left;
  } else {
    // divergent term beta·<w,L⁻>/(4 alpha) along L⁻
    a.direction = LightDirection::LMinus;
    const int num = orientation * sign_of(td.beta * pseudo_dot(w, kLMinus));
    auto [right, left] = side_signs(td.dalpha, td.ddalpha, accel);
    a.sign_right = num * right;
    a.sign_left = num * left;
  }
  return a;
}

EvaluatedPoint lightlike_point(const TangentialData& td, MVec2 q, double t, int orientation) {
  EvaluatedPoint p;
  p.t = t;
  switch (q_incidence(td, q)) {
    case QIncidence::Coincident:
      p.position = td.gamma;
      p.status = PointStatus::LimitValue;
      break;
    case QIncidence::OnTangentLine:
    case QIncidence::OnNormalLine:
      p.position = lightlike_limit_value(td, q);
      p.status = PointStatus::LimitValue;
      break;
    case QIncidence::Generic:
      p.status = PointStatus::Asymptotic;
      p.asymptote = asymptote_at(td, q, orientation);
      break;
  }
  return p;
}

bool cpe_singular(const TangentialData& td, MVec2 q) {
  const CpeCoefficients cc = cpe_coefficients(td, q);
  return near_zero(cc.first, cc.first_scale) && near_zero(cc.second, cc.second_scale);
}

MVec2 cpe_derivative_at(const TangentialData& td, MVec2 q) {
  const CpeCoefficients cc = cpe_coefficients(td, q);
  return cc.first * kLPlus + cc.second * kLMinus;
}

OmegaValue omega_at(const TangentialData& td, MVec2 q, double* band = nullptr) {
  const double a = td.alpha, b = td.beta, k = td.inflection_value();
  const MVec2 w = q - td.gamma;
  const double p = pseudo_dot(w, kLPlus), m = pseudo_dot(w, kLMinus);
  const double t1 = k / (4.0 * a * b * b) * p;
  const double t2 = k / (4.0 * a * a * b) * m;
  const double t3 = k * k / (16.0 * a * a * a * b * b * b) * p * m;
  if (band) *band = tol::kLightlike * (1.0 + std::abs(t1) + std::abs(t2) + std::abs(t3));
  const MVec2 d = cpe_derivative_at(td, q);
  return {1.0 + t1 - t2 - t3, pseudo_dot(d, d)};
}

std::optional<CausalType> classify_cpe(const TangentialData& td, MVec2 q) {
  if (!is_lightlike(td)) {
    if (cpe_singular(td, q)) return std::nullopt;
    double band = 0.0;
    const double om = omega_at(td, q, &band).omega;
    if (std::abs(om) <= band) return CausalType::Lightlike;
    const bool base_spacelike = td.alpha * td.beta < 0.0;
    const bool same = om > 0.0;
    return (base_spacelike == same) ? CausalType::Spacelike : CausalType::Timelike;
  }
  const QIncidence inc = q_incidence(td, q);
  if (inc == QIncidence::Generic)
    throw NotApplicable("contrapedal is asymptotic here; no point to classify");
  if (is_inflection(td)) {
    if (is_ordinary_inflection(td)) return CausalType::Lightlike;
    return std::nullopt;
  }
  if (inc == QIncidence::Coincident) return CausalType::Lightlike;
  const MVec2 w = q - td.gamma;
  const double s = lightlike_branch(td) == Branch::BetaZero ? pseudo_dot(w, kLMinus) * td.dbeta
                                                            : pseudo_dot(w, kLPlus) * td.dalpha;
  if (s < 0.0) return CausalType::Spacelike;
  if (s > 0.0) return CausalType::Timelike;
  return std::nullopt;
}

void require_q(MVec2 q) { require_finite(q, "pedal point Q"); }

}  // namespace

QIncidence q_incidence(const TangentialData& td, MVec2 q) {
  require_q(q);
  const MVec2 w = q - td.gamma;
  const double wn = euclid_norm(w);
  const double pos_scale = std::max({1.0, euclid_norm(td.gamma), euclid_norm(q)});
  if (wn < tol::kIdentity * pos_scale) return QIncidence::Coincident;
  if (is_lightlike(td)) {
    const double along = lightlike_branch(td) == Branch::BetaZero ? pseudo_dot(w, kLPlus)
                                                                  : pseudo_dot(w, kLMinus);
    return std::abs(along) <= tol::kIdentity * 2.0 * wn ? QIncidence::OnTangentLine
                                                        : QIncidence::Generic;
  }
  const double vn = euclid_norm(td.dgamma);
  if (std::abs(cross(w, td.dgamma)) <= tol::kIdentity * wn * vn) return QIncidence::OnTangentLine;
  if (std::abs(cross(w, td.normal())) <= tol::kIdentity * wn * vn) return QIncidence::OnNormalLine;
  return QIncidence::Generic;
}

QIncidence q_incidence(const ParametricCurve& c, MVec2 q, double t) {
  return q_incidence(tangential_data(c, t), q);
}

MVec2 lightlike_limit_value(const TangentialData& td, MVec2 q) {
  const MVec2 w = q - td.gamma;
  if (lightlike_branch(td) == Branch::BetaZero) return td.gamma - 0.25 * pseudo_dot(w, kLMinus) * kLPlus;
  return td.gamma - 0.25 * pseudo_dot(w, kLPlus) * kLMinus;
}

EvaluatedPoint contrapedal(const ParametricCurve& c, MVec2 q, double t) {
  require_q(q);
  const TangentialData td = tangential_data(c, t);
  if (is_lightlike(td)) {
    EvaluatedPoint p = lightlike_point(td, q, t, +1);
    if (p.position) p.causal = classify_cpe(td, q);
    return p;
  }
  const MVec2 n = td.normal();
  const double s = pseudo_dot(q - td.gamma, n) / (4.0 * td.alpha * td.beta);
  EvaluatedPoint p;
  p.t = t;
  p.position = td.gamma + s * n;
  p.status = cpe_singular(td, q) ? PointStatus::Singular : PointStatus::Regular;
  p.causal = classify_cpe(td, q);
  return p;
}

EvaluatedPoint pedal(const ParametricCurve& c, MVec2 q, double t) {
  require_q(q);
  const TangentialData td = tangential_data(c, t);
  if (is_lightlike(td)) return lightlike_point(td, q, t, -1);
  const double s = pseudo_dot(q - td.gamma, td.dgamma) / (4.0 * td.alpha * td.beta);
  EvaluatedPoint p;
  p.t = t;
  p.position = td.gamma - s * td.dgamma;
  p.status = PointStatus::Regular;
  return p;
}

bool evolute_defined(const TangentialData& td) { return !is_lightlike(td) && !is_inflection(td); }

EvaluatedPoint evolute(const ParametricCurve& c, double t) {
  const TangentialData td = tangential_data(c, t);
  if (!evolute_defined(td))
    throw EvoluteUndefined("evolute undefined at a lightlike point or inflection");
  const double coef = 2.0 * td.alpha * td.beta / td.inflection_value();
  EvaluatedPoint p;
  p.t = t;
  p.position = td.gamma - coef * td.normal();
  return p;
}

CpeCoefficients cpe_coefficients(const TangentialData& td, MVec2 q) {
  const double a = td.alpha, b = td.beta, k = td.inflection_value();
  const MVec2 w = q - td.gamma;
  const double plus = k / (4.0 * b * b) * pseudo_dot(w, kLPlus);
  const double minus = k / (4.0 * a * a) * pseudo_dot(w, kLMinus);
  return {a + plus, b - minus, std::abs(a) + std::abs(plus), std::abs(b) + std::abs(minus)};
}

MVec2 cpe_derivative(const ParametricCurve& c, MVec2 q, double t) {
  require_q(q);
  const TangentialData td = tangential_data(c, t);
  if (is_lightlike(td))
    throw LightlikeDerivativeUndefined("contrapedal derivative formula needs a non-lightlike point");
  return cpe_derivative_at(td, q);
}

bool is_cpe_singular(const ParametricCurve& c, MVec2 q, double t) {
  require_q(q);
  const TangentialData td = tangential_data(c, t);
  if (!is_lightlike(td)) return cpe_singular(td, q);
  if (q_incidence(td, q) == QIncidence::Generic)
    throw NotApplicable("contrapedal does not exist at this lightlike point");
  return false;
}

OmegaValue omega(const ParametricCurve& c, MVec2 q, double t) {
  require_q(q);
  const TangentialData td = tangential_data(c, t);
  if (is_lightlike(td)) throw LightlikeDerivativeUndefined("omega needs a non-lightlike point");
  return omega_at(td, q);
}

std::optional<CausalType> classify_cpe_point(const ParametricCurve& c, MVec2 q, double t) {
  require_q(q);
  return classify_cpe(tangential_data(c, t), q);
}

CurveJet EvoluteCurve::jet(double t) const {
  const auto [x5, y5] = base_.jet_n<5>(t);
  const TangentialData td = tangential_data(CurveJet{x5.truncate<3>(), y5.truncate<3>()});
  if (!evolute_defined(td))
    throw EvoluteUndefined("evolute undefined at a lightlike point or inflection");
  const Jet<4> dx = x5.derivative(), dy = y5.derivative();
  const Jet<4> a4 = (dx + dy) * 0.5, b4 = (dx - dy) * 0.5;
  const Jet3 a = a4.truncate<3>(), b = b4.truncate<3>();
  const Jet3 da = a4.derivative(), db = b4.derivative();
  const Jet3 coef = 2.0 * a * b / (da * b - a * db);
  // gamma − coef·(αL⁺ − βL⁻), with αL⁺ − βL⁻ = (α − β, α + β)
  return {x5.truncate<3>() - coef * (a - b), y5.truncate<3>() - coef * (a + b)};
}

IdentityReport verify_pedal_evolute_identity(const CurveDef& c, MVec2 q, std::span<const double> ts) {
  require_q(q);
  const EvoluteCurve ev(c);
  IdentityReport rep;
  rep.deviations.reserve(ts.size());
  for (double t : ts) {
    const EvaluatedPoint lhs = pedal(ev, q, t);
    const EvaluatedPoint rhs = contrapedal(c, q, t);
    if (!lhs.position || !rhs.position)
      throw NotApplicable("pedal of the evolute or contrapedal has no position here");
    const double dev = euclid_norm(*lhs.position - *rhs.position);
    rep.deviations.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

bool satisfies_incidence_hypothesis(const ParametricCurve& c, MVec2 q,
                                    const std::vector<ParamEvent>& events) {
  bool any_lightlike = false;
  for (const ParamEvent& e : events) {
    if (e.branch == Branch::NotApplicable) continue;
    any_lightlike = true;
    const QIncidence inc = q_incidence(c, q, e.t);
    if (inc == QIncidence::Coincident || inc == QIncidence::OnTangentLine) return true;
  }
  return !any_lightlike;
}

}  // namespace mixcurve
