#include <gtest/gtest.h>

#include <numbers>

#include "mixcurve/errors.hpp"
#include "mixcurve/associated.hpp"
#include "mixcurve/oracle.hpp"
#include "mixcurve/sampling.hpp"
#include "support/fixtures.hpp"

using namespace mixcurve;
using namespace mixcurve::testing;
using std::numbers::pi;

namespace {

void expect_near(MVec2 a, MVec2 b, double tol) {
  EXPECT_NEAR(a.x1, b.x1, tol);
  EXPECT_NEAR(a.x2, b.x2, tol);
}

// the located lightlike parameter nearest t
double located(const CurveDef& c, double t) {
  for (const ParamEvent& e : find_events(c))
    if (std::abs(e.t - t) < 1e-6) return e.t;
  return t;
}

MVec2 cpe_at(const CurveDef& c, MVec2 q, double t) { return contrapedal(c, q, t).position.value(); }

}  // namespace

TEST(Contrapedal, EllipseClosedForm) {
  const double t = pi / 4, s = std::sin(t), c = std::cos(t), d = c * c - 3 * s * s;
  const EvaluatedPoint p = contrapedal(builtin("ellipse-ex1"), {0, 0}, t);
  EXPECT_EQ(p.status, PointStatus::Regular);
  expect_near(p.position.value(), {-8 * s * s * c / d, 8 * kSqrt3 * s * c * c / (3 * d)}, 1e-12);
}

TEST(Contrapedal, CubicCoincidentAtLightlike) {
  const EvaluatedPoint p = contrapedal(builtin("cubic-ex3"), {0, 0}, 0.0);
  ASSERT_TRUE(p.position);
  EXPECT_EQ(p.status, PointStatus::LimitValue);
  expect_near(*p.position, {0, 0}, 1e-15);
}

TEST(Contrapedal, EllipseCoincidentAtLightlike) {
  const CurveDef c = builtin("ellipse-ex1");
  const double t0 = located(c, 5 * pi / 6);
  const MVec2 q{-kSqrt3, kSqrt3 / 3};
  EXPECT_EQ(q_incidence(c, q, t0), QIncidence::Coincident);
  const EvaluatedPoint p = contrapedal(c, q, t0);
  ASSERT_TRUE(p.position);
  expect_near(*p.position, q, 1e-12);
  EXPECT_EQ(p.causal, CausalType::Lightlike);
}

TEST(Contrapedal, ParabolaAsymptotic) {
  const CurveDef c = builtin("parabola-ex2");
  const EvaluatedPoint p = contrapedal(c, {0, 0}, 0.5);
  EXPECT_EQ(p.status, PointStatus::Asymptotic);
  EXPECT_FALSE(p.position);
  ASSERT_TRUE(p.asymptote);
  EXPECT_EQ(p.asymptote->direction, LightDirection::LPlus);
  EXPECT_NE(p.asymptote->sign_right, 0);
  EXPECT_EQ(p.asymptote->sign_left, -p.asymptote->sign_right);

  // the reported senses match the actual escape along L+
  const double h = 1e-6;
  const double right = pseudo_dot(cpe_at(c, {0, 0}, 0.5 + h), kLMinus);
  const double left = pseudo_dot(cpe_at(c, {0, 0}, 0.5 - h), kLMinus);
  // <L+, L-> = -2, so the L+ coefficient has the opposite sign of <p, L->
  EXPECT_EQ(right < 0 ? 1 : -1, p.asymptote->sign_right);
  EXPECT_EQ(left < 0 ? 1 : -1, p.asymptote->sign_left);

  const EvaluatedPoint m = contrapedal(c, {0, 0}, -0.5);
  EXPECT_EQ(m.status, PointStatus::Asymptotic);
  EXPECT_EQ(m.asymptote->direction, LightDirection::LMinus);
}

TEST(Contrapedal, StatusInvariant) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> qd(-2, 2);
  for (const auto& name : builtin_names()) {
    const CurveDef c = builtin(name);
    std::vector<double> ts = uniform_parameters(c.domain(), 41);
    for (const ParamEvent& e : find_events(c)) ts.push_back(e.t);
    for (double t : ts) {
      for (int k = 0; k < 3; ++k) {
        const MVec2 q{qd(rng), qd(rng)};
        for (const EvaluatedPoint& p : {contrapedal(c, q, t), pedal(c, q, t)}) {
          EXPECT_EQ(p.status == PointStatus::Asymptotic, !p.position.has_value());
          EXPECT_EQ(p.asymptote.has_value(), p.status == PointStatus::Asymptotic);
        }
      }
    }
  }
}

TEST(Pedal, Examples) {
  const CurveDef par = builtin("parabola-ex2");
  expect_near(pedal(par, {2, 3}, 1.0).position.value(), {2, 3}, 1e-12);
  const CurveDef cub = builtin("cubic-ex3");
  const EvaluatedPoint pe = pedal(cub, {1, 1}, 0.0), cpe = contrapedal(cub, {1, 1}, 0.0);
  expect_near(pe.position.value(), cpe.position.value(), 1e-15);
  // the formulas give (1/2, 1/2); the printed (-1/2, 1/2) is not reproduced
  expect_near(pe.position.value(), {0.5, 0.5}, 1e-15);
}

TEST(Pedal, PointOnTangentReturnsItself) {
  for (const auto& s : random_triples(200, 5)) {
    const TangentialData td = tangential_data(s.curve, s.t);
    const MVec2 q = pedal(s.curve, s.q, s.t).position.value();
    const MVec2 again = pedal(s.curve, q, s.t).position.value();
    EXPECT_LE(euclid_norm(again - q), 1e-10 * std::max(1.0, euclid_norm(q))) << s.curve.name() << " t=" << s.t;
    (void)td;
  }
}

TEST(Pedal, AsymptoteOppositeToContrapedal) {
  const CurveDef c = builtin("parabola-ex2");
  const EvaluatedPoint pe = pedal(c, {0, 0}, 0.5), cpe = contrapedal(c, {0, 0}, 0.5);
  ASSERT_TRUE(pe.asymptote && cpe.asymptote);
  EXPECT_EQ(pe.asymptote->direction, cpe.asymptote->direction);
  const double h = 1e-6;
  const double right = pseudo_dot(pedal(c, {0, 0}, 0.5 + h).position.value(), kLMinus);
  EXPECT_EQ(right < 0 ? 1 : -1, pe.asymptote->sign_right);
}

TEST(Evolute, Examples) {
  // the closed form is (4t^3, 3t^2 - 1/2)
  expect_near(evolute(builtin("parabola-ex2"), 0.0).position.value(), {0, -0.5}, 1e-15);
  expect_near(evolute(builtin("parabola-ex2"), 0.3).position.value(), {4 * 0.027, 3 * 0.09 - 0.5}, 1e-14);
  EXPECT_THROW(evolute(builtin("cubic-ex3"), 0.0), EvoluteUndefined);
  EXPECT_THROW(evolute(builtin("parabola-ex2"), 0.5), EvoluteUndefined);
  // (8cos^3 t / 3, 8 sqrt3 sin^3 t / 3) on the symmetry axis
  const MVec2 e0 = evolute(builtin("ellipse-ex1"), 0.0).position.value();
  expect_near(e0, {8.0 / 3, 0}, 1e-14);
}

TEST(CpeDerivative, Examples) {
  const CurveDef par = builtin("parabola-ex2");
  // coincident Q: derivative is the base velocity
  const TangentialData td = tangential_data(par, 0.8);
  expect_near(cpe_derivative(par, td.gamma, 0.8), td.dgamma, 1e-14);

  auto closed2 = [](double t) {
    const double d = 4 * t * t - 1;
    return MVec2{(2 * t * t * t - t) / d, (4 * t * t * t * t - 2 * t * t) / d};
  };
  expect_near(cpe_derivative(par, {0, 0}, 1.0), oracle::numeric_derivative(closed2, 1.0, 1), 1e-6);

  auto closed1 = [](double t) {
    const double s = std::sin(t), c = std::cos(t), d = c * c - 3 * s * s;
    return MVec2{-8 * s * s * c / d, 8 * kSqrt3 * s * c * c / (3 * d)};
  };
  expect_near(cpe_derivative(builtin("ellipse-ex1"), {0, 0}, pi / 4), oracle::numeric_derivative(closed1, pi / 4, 1),
              1e-6);

  EXPECT_THROW(cpe_derivative(par, {0, 0}, 0.5), LightlikeDerivativeUndefined);
}

TEST(CpeDerivative, MatchesFiniteDifferences) {
  for (const auto& s : random_triples(300, 8)) {
    const MVec2 d = cpe_derivative(s.curve, s.q, s.t);
    const MVec2 fd = oracle::numeric_derivative([&](double t) { return cpe_at(s.curve, s.q, t); }, s.t, 1, 1e-3);
    EXPECT_LE(euclid_norm(d - fd), 1e-6 * std::max(1.0, euclid_norm(fd))) << s.curve.name() << " t=" << s.t;
  }
}

TEST(Singular, Examples) {
  const CurveDef par = builtin("parabola-ex2");
  EXPECT_FALSE(is_cpe_singular(par, par.position(0.3), 0.3));
  EXPECT_FALSE(is_cpe_singular(builtin("cubic-ex3"), {1, 1}, 0.0));
  EXPECT_FALSE(is_cpe_singular(builtin("cubic-ex3"), {0, 0}, 0.0));
  EXPECT_THROW(is_cpe_singular(par, {0, 0}, 0.5), NotApplicable);
}

TEST(Singular, ScannedConfigurationsAreSingular) {
  // both derivative coefficients vanish exactly when Q is the evolute point
  int found = 0;
  for (const auto& name : builtin_names()) {
    const CurveDef c = builtin(name);
    for (double t : {c.domain().lo + 0.23 * c.domain().length(), c.domain().lo + 0.81 * c.domain().length()}) {
      const auto q = scan_singular_q(c, t);
      ASSERT_TRUE(q) << name;
      ++found;
      EXPECT_TRUE(is_cpe_singular(c, *q, t));
      expect_near(*q, evolute(c, t).position.value(), 1e-12 * std::max(1.0, euclid_norm(*q)));
      const MVec2 v = oracle::numeric_derivative([&](double s) { return cpe_at(c, *q, s); }, t, 1);
      EXPECT_LE(euclid_norm(v), 1e-6);
      EXPECT_EQ(contrapedal(c, *q, t).status, PointStatus::Singular);
      EXPECT_FALSE(classify_cpe_point(c, *q, t));
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Omega, Examples) {
  const CurveDef par = builtin("parabola-ex2");
  const TangentialData td = tangential_data(par, 0.3);
  const OmegaValue one = omega(par, td.gamma, 0.3);
  EXPECT_NEAR(one.omega, 1.0, 1e-15);
  EXPECT_NEAR(one.self_product, -4 * td.alpha * td.beta, 1e-14);

  const TangentialData t8 = tangential_data(par, 0.8);
  const OmegaValue o8 = omega(par, {0, 0}, 0.8);
  EXPECT_NEAR(o8.self_product, -4 * t8.alpha * t8.beta * o8.omega, 1e-8 * std::abs(o8.self_product));

  EXPECT_THROW(omega(par, {0, 0}, 0.5), LightlikeDerivativeUndefined);
}

TEST(Omega, EllipseTangentQNearLightlike) {
  // approaching 5pi/6 from the non-lightlike side, Omega keeps the sign that
  // makes the contrapedal point spacelike
  const CurveDef c = builtin("ellipse-ex1");
  const MVec2 q{0, 4 * kSqrt3 / 3};
  const double t0 = located(c, 5 * pi / 6);
  for (double h : {1e-2, 1e-3, 1e-4}) {
    for (double t : {t0 - h, t0 + h}) {
      EXPECT_EQ(classify_cpe_point(c, q, t), CausalType::Spacelike) << t;
      const TangentialData td = tangential_data(c, t);
      const CausalType base = -4 * td.alpha * td.beta > 0 ? CausalType::Spacelike : CausalType::Timelike;
      const double om = omega(c, q, t).omega;
      EXPECT_EQ(om > 0 ? base : (base == CausalType::Spacelike ? CausalType::Timelike : CausalType::Spacelike),
                CausalType::Spacelike);
    }
  }
}

TEST(Omega, RandomConsistency) {
  for (const auto& s : random_triples(500, 13)) {
    const TangentialData td = tangential_data(s.curve, s.t);
    const OmegaValue om = omega(s.curve, s.q, s.t);
    const MVec2 d = cpe_derivative(s.curve, s.q, s.t);
    const double scale = std::max(std::abs(om.self_product), euclid_norm(d) * euclid_norm(d));
    EXPECT_LE(std::abs(om.self_product + 4 * td.alpha * td.beta * om.omega), 1e-8 * scale);
  }
}

TEST(ClassifyCpe, Examples) {
  const CurveDef ell = builtin("ellipse-ex1");
  EXPECT_EQ(classify_cpe_point(ell, {0, 4 * kSqrt3 / 3}, located(ell, 5 * pi / 6)), CausalType::Spacelike);
  EXPECT_EQ(classify_cpe_point(builtin("parabola-ex2"), {1, 0.75}, 0.5), CausalType::Timelike);
  EXPECT_EQ(classify_cpe_point(builtin("cubic-ex3"), {1, 1}, 0.0), CausalType::Lightlike);
  EXPECT_EQ(classify_cpe_point(builtin("cubic-ex3"), {0, 0}, 0.0), CausalType::Lightlike);
  EXPECT_EQ(classify_cpe_point(builtin("parabola-ex2"), {0.5, 0.25}, 0.5), CausalType::Lightlike);
  EXPECT_THROW(classify_cpe_point(builtin("parabola-ex2"), {0, 0}, 0.5), NotApplicable);
}

TEST(ClassifyCpe, LightlikeTangentSignsMatchNeighbourhood) {
  // the sign rule at a lightlike point agrees with the type just beside it
  struct Case {
    const char* curve;
    double t;
    MVec2 q;
  };
  const Case cases[] = {{"parabola-ex2", 0.5, {1, 0.75}},
                        {"parabola-ex2", 0.5, {0, -0.25}},
                        {"parabola-ex2", -0.5, {0, -0.25}},
                        {"parabola-ex2", -0.5, {-1, 0.75}},
                        {"ellipse-ex1", 5 * pi / 6, {0, 4 * kSqrt3 / 3}},
                        {"ellipse-ex1", pi / 6, {0, 4 * kSqrt3 / 3}}};
  for (const Case& k : cases) {
    const CurveDef c = builtin(k.curve);
    const double t0 = located(c, k.t);
    ASSERT_EQ(q_incidence(c, k.q, t0), QIncidence::OnTangentLine) << k.curve << " " << k.t;
    const auto at = classify_cpe_point(c, k.q, t0);
    ASSERT_TRUE(at);
    for (double h : {1e-3, -1e-3}) EXPECT_EQ(classify_cpe_point(c, k.q, t0 + h), at) << k.curve << " " << k.t;
  }
}

TEST(ClassifyCpe, NonOrdinaryInflectionIsUnclassified) {
  // y = t + t^5: beta = -5t^4/2 touches zero with k = 0 and k' = 0 at t = 0
  const CurveDef c = CurveDef::parse("t", "t + t^5", {-1, 1});
  const TangentialData td = tangential_data(c, 0.0);
  ASSERT_TRUE(is_lightlike(td));
  ASSERT_TRUE(is_inflection(td));
  ASSERT_FALSE(is_ordinary_inflection(td));
  EXPECT_FALSE(classify_cpe_point(c, {1, 1}, 0.0));
}

TEST(QIncidence, Examples) {
  const CurveDef ell = builtin("ellipse-ex1");
  EXPECT_EQ(q_incidence(ell, {-kSqrt3, kSqrt3 / 3}, located(ell, 5 * pi / 6)), QIncidence::Coincident);
  EXPECT_EQ(q_incidence(builtin("parabola-ex2"), {3, 2}, 1.0), QIncidence::OnNormalLine);
  EXPECT_EQ(q_incidence(builtin("parabola-ex2"), {2, 3}, 1.0), QIncidence::OnTangentLine);
  EXPECT_EQ(q_incidence(builtin("parabola-ex2"), {1, 0.75}, 0.5), QIncidence::OnTangentLine);
  EXPECT_EQ(q_incidence(builtin("parabola-ex2"), {0, 0}, 0.5), QIncidence::Generic);
  // at a lightlike point tangent and normal lines coincide; tangent wins
  EXPECT_EQ(q_incidence(builtin("cubic-ex3"), {1, 1}, 0.0), QIncidence::OnTangentLine);
}

TEST(QIncidence, PropositionOnRandomSamples) {
  for (const auto& s : random_triples(300, 17)) {
    const TangentialData td = tangential_data(s.curve, s.t);
    const MVec2 qt = td.gamma + 1.3 * td.dgamma, qn = td.gamma - 0.4 * td.normal();
    ASSERT_EQ(q_incidence(td, qt), QIncidence::OnTangentLine);
    ASSERT_EQ(q_incidence(td, qn), QIncidence::OnNormalLine);
    ASSERT_EQ(q_incidence(td, td.gamma), QIncidence::Coincident);
    const double sc = std::max({1.0, euclid_norm(qt), euclid_norm(qn)});
    EXPECT_LE(euclid_norm(pedal(s.curve, qt, s.t).position.value() - qt), 1e-9 * sc);
    EXPECT_LE(euclid_norm(cpe_at(s.curve, qn, s.t) - qn), 1e-9 * sc);
  }
}

TEST(Lightlike, PedalEqualsContrapedalOnTangent) {
  for (const auto& name : builtin_names()) {
    const CurveDef c = builtin(name);
    for (const ParamEvent& e : find_events(c)) {
      if (e.branch == Branch::NotApplicable) continue;
      const TangentialData td = tangential_data(c, e.t);
      for (double lam : {-2.0, 0.5, 1.7}) {
        const MVec2 q = td.gamma + lam * td.dgamma;
        const EvaluatedPoint pe = pedal(c, q, e.t), cpe = contrapedal(c, q, e.t);
        ASSERT_TRUE(pe.position && cpe.position);
        EXPECT_EQ(cpe.status, PointStatus::LimitValue);
        EXPECT_LE(euclid_norm(*pe.position - *cpe.position), 1e-9);
        expect_near(*cpe.position, lightlike_limit_value(td, q), 1e-15);
      }
    }
  }
}

TEST(Lightlike, LimitValueMatchesExtrapolation) {
  for (const auto& name : builtin_names()) {
    const CurveDef c = builtin(name);
    for (const ParamEvent& e : find_events(c)) {
      if (e.branch == Branch::NotApplicable) continue;
      const TangentialData td = tangential_data(c, e.t);
      const MVec2 q = td.gamma + 0.9 * td.dgamma;
      const MVec2 lim = oracle::limit_estimate(
          [&](double t) {
            const TangentialData d = tangential_data(c, t);
            return oracle::foot_on_line(q, {d.gamma, d.normal()});
          },
          e.t, oracle::Side::Both);
      EXPECT_LE(euclid_norm(lim - cpe_at(c, q, e.t)), 1e-5 * std::max(1.0, euclid_norm(lim))) << name << " " << e.t;
    }
  }
}

TEST(FootProperties, RandomSamples) {
  for (const auto& s : random_triples(500, 23)) {
    const TangentialData td = tangential_data(s.curve, s.t);
    const MVec2 cpe = cpe_at(s.curve, s.q, s.t), pe = pedal(s.curve, s.q, s.t).position.value();
    const MVec2 n = td.normal(), v = td.dgamma;
    const double sc = std::max({1.0, euclid_norm(td.gamma), euclid_norm(s.q), euclid_norm(cpe), euclid_norm(pe)});
    EXPECT_LE(std::abs(pseudo_dot(s.q - cpe, n)), 1e-9 * sc * euclid_norm(n));
    EXPECT_LE(std::abs(cross(cpe - td.gamma, n)), 1e-9 * sc * euclid_norm(n));
    EXPECT_LE(std::abs(pseudo_dot(s.q - pe, v)), 1e-9 * sc * euclid_norm(v));
    EXPECT_LE(std::abs(cross(pe - td.gamma, v)), 1e-9 * sc * euclid_norm(v));
    EXPECT_LE(euclid_norm(pe + cpe - td.gamma - s.q), 1e-9 * sc);
  }
}

TEST(EvoluteCurve, JetsMatchFiniteDifferences) {
  const CurveDef c = builtin("parabola-ex2");
  const EvoluteCurve ev(c);
  for (double t : {0.1, 0.3, 0.7, -0.8}) {
    const CurveJet j = ev.jet(t);
    expect_near(j.position(), evolute(c, t).position.value(), 1e-14);
    auto f = [&](double s) { return evolute(c, s).position.value(); };
    expect_near(j.velocity(), oracle::numeric_derivative(f, t, 1, 1e-3), 1e-6);
    expect_near(j.acceleration(), oracle::numeric_derivative(f, t, 2, 1e-3), 1e-5);
    // closed form (4t^3, 3t^2 - 1/2)
    expect_near(j.jerk(), {24, 0}, 1e-10);
  }
  EXPECT_THROW(ev.jet(0.5), EvoluteUndefined);
}

TEST(PedalEvoluteIdentity, Examples) {
  std::vector<double> ts;
  for (int i = 0; i < 20; ++i) ts.push_back(0.05 + 0.4 * (i + 0.5) / 20);
  EXPECT_LE(verify_pedal_evolute_identity(builtin("parabola-ex2"), {0.5, 0.25}, ts).max_deviation, 1e-6);

  std::vector<double> te;
  for (int i = 0; i < 20; ++i) te.push_back(5 * pi / 6 + 0.1 + 0.5 * (i + 0.5) / 20);
  const IdentityReport r = verify_pedal_evolute_identity(builtin("ellipse-ex1"), {-kSqrt3, kSqrt3 / 3}, te);
  EXPECT_EQ(r.deviations.size(), 20u);
  EXPECT_LE(r.max_deviation, 1e-6);

  const CurveDef par = builtin("parabola-ex2");
  const double t1[] = {0.3};
  const MVec2 q = par.position(0.3);
  EXPECT_LE(verify_pedal_evolute_identity(par, q, t1).max_deviation, 1e-12);
  expect_near(cpe_at(par, q, 0.3), q, 1e-15);

  const double bad[] = {0.5};
  EXPECT_THROW(verify_pedal_evolute_identity(par, q, bad), EvoluteUndefined);
}

TEST(PedalEvoluteIdentity, HoldsForArbitraryQ) {
  const CurveDef c = builtin("ellipse-ex1");
  std::vector<double> ts;
  for (int i = 0; i < 30; ++i) ts.push_back(0.2 + 0.3 * i / 30.0);
  for (MVec2 q : {MVec2{0, 0}, MVec2{2, -1}, MVec2{-0.3, 3}})
    EXPECT_LE(verify_pedal_evolute_identity(c, q, ts).max_deviation, 1e-6);
}

TEST(IncidenceHypothesis, Gate) {
  const CurveDef par = builtin("parabola-ex2");
  const auto ev = find_events(par);
  EXPECT_TRUE(satisfies_incidence_hypothesis(par, {0.5, 0.25}, ev));
  EXPECT_TRUE(satisfies_incidence_hypothesis(par, {1, 0.75}, ev));
  EXPECT_FALSE(satisfies_incidence_hypothesis(par, {0, 0}, ev));
  const CurveDef circ = CurveDef::parse("cos(t)", "2 + sin(t)", {0, 0.3});
  EXPECT_TRUE(satisfies_incidence_hypothesis(circ, {5, 5}, find_events(circ)));
}
