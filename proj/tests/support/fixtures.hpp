#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixcurve/associated.hpp"
#include "mixcurve/expr.hpp"

namespace mixcurve::testing {

inline constexpr double kPi = std::numbers::pi;
inline const double kSqrt3 = std::sqrt(3.0);

enum class Kind { Pedal, Contrapedal };

// A closed form as printed in the source examples, with the denominator used
// to keep samples away from its poles.
struct ClosedForm {
  std::string label;
  std::string curve;
  MVec2 q;
  Kind kind;
  std::function<MVec2(double)> f;
  std::function<double(double)> denom;
};

inline std::vector<ClosedForm> printed_forms() {
  using std::cos;
  using std::sin;
  const double r3 = kSqrt3;
  auto ell = [](double t) { return cos(t) * cos(t) - 3 * sin(t) * sin(t); };
  auto par = [](double t) { return 4 * t * t - 1; };
  auto par_lin = [](double t) { return 4 * t + 2; };
  auto cub2 = [](double t) { return 9 * t * t + 6; };
  auto cub4 = [](double t) { return 9 * t * t * t * t + 6 * t * t; };
  return {
      {"ex1 Q=(0,0)", "ellipse-ex1", {0, 0}, Kind::Contrapedal,
       [=](double t) {
         const double d = ell(t), s = sin(t), c = cos(t);
         return MVec2{-8 * s * s * c / d, 8 * r3 * s * c * c / (3 * d)};
       },
       ell},
      {"ex1 Q=(-sqrt3,sqrt3/3)", "ellipse-ex1", {-r3, r3 / 3}, Kind::Contrapedal,
       [=](double t) {
         const double d = ell(t), s = sin(t), c = cos(t);
         return MVec2{(-r3 * c * c + s * c - 8 * s * s * c) / d,
                      (-3 * r3 * s * s + 9 * s * c + 8 * r3 * s * c * c) / (3 * d)};
       },
       ell},
      {"ex1 Q=(0,4sqrt3/3)", "ellipse-ex1", {0, 4 * r3 / 3}, Kind::Contrapedal,
       [=](double t) {
         const double d = ell(t), s = sin(t), c = cos(t);
         return MVec2{(-8 * s * s * c + 4 * s * c) / d, (-12 * r3 * s * s + 8 * r3 * s * c * c) / (3 * d)};
       },
       ell},
      {"ex2 Q=(0,0)", "parabola-ex2", {0, 0}, Kind::Contrapedal,
       [=](double t) {
         const double d = par(t);
         return MVec2{(2 * t * t * t - t) / d, (4 * t * t * t * t - 2 * t * t) / d};
       },
       par},
      {"ex2 Q=(1/2,1/4)", "parabola-ex2", {0.5, 0.25}, Kind::Contrapedal,
       [=](double t) {
         return MVec2{(2 * t * t + 3 * t) / (4 * t + 2), (8 * t * t * t + 4 * t * t - 2 * t + 1) / (8 * t + 4)};
       },
       par_lin},
      {"ex2 Q=(1,3/4)", "parabola-ex2", {1, 0.75}, Kind::Contrapedal,
       [=](double t) {
         return MVec2{(2 * t * t + 5 * t) / (4 * t + 2), (8 * t * t * t + 4 * t * t - 2 * t + 3) / (8 * t + 4)};
       },
       par_lin},
      {"ex3 Q=(1,2)", "cubic-ex3", {1, 2}, Kind::Contrapedal,
       [=](double t) {
         const double d = cub4(t), t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t7 = t5 * t2;
         return MVec2{(3 * t5 + 9 * t4 + 4 * t3 + 1) / d, (9 * t7 + 15 * t5 + 4 * t3 + 3 * t2 - 1) / d};
       },
       cub4},
      {"ex3 Q=(0,0)", "cubic-ex3", {0, 0}, Kind::Contrapedal,
       [=](double t) {
         const double d = cub2(t), t3 = t * t * t, t5 = t3 * t * t;
         return MVec2{(3 * t3 + 4 * t) / d, (9 * t5 + 15 * t3 - 4 * t) / d};
       },
       cub2},
      {"ex3 Q=(1,1)", "cubic-ex3", {1, 1}, Kind::Contrapedal,
       [=](double t) {
         const double d = cub2(t), t3 = t * t * t, t5 = t3 * t * t;
         return MVec2{(3 * t3 + 9 * t * t + 4 * t + 3) / d, (9 * t5 + 15 * t3 + 4 * t + 3) / d};
       },
       cub2},
      {"ex4 Pe Q=(1,1)", "cubic-ex3", {1, 1}, Kind::Pedal,
       [=](double t) {
         const double d = cub2(t);
         return MVec2{(6 * t * t * t + 2 * t + 3) / d, (9 * t * t + 2 * t + 3) / d};
       },
       cub2},
      {"ex4 CPe Q=(1,1)", "cubic-ex3", {1, 1}, Kind::Contrapedal,
       [=](double t) {
         const double d = cub2(t), t3 = t * t * t, t5 = t3 * t * t;
         return MVec2{(3 * t3 + 9 * t * t + 4 * t + 3) / d, (9 * t5 + 15 * t3 + 4 * t + 3) / d};
       },
       cub2},
      {"ex5 Pe Q=(2,3)", "parabola-ex2", {2, 3}, Kind::Pedal,
       [=](double t) {
         const double d = par(t);
         return MVec2{(2 * t * t * t + 6 * t - 2) / d, (13 * t * t - 4 * t) / d};
       },
       par},
      {"ex5 CPe Q=(3,2)", "parabola-ex2", {3, 2}, Kind::Contrapedal,
       [=](double t) {
         const double d = par(t);
         return MVec2{(2 * t * t * t + 12 * t * t - 5 * t) / d, (4 * t * t * t * t - 2 * t * t + 6 * t - 2) / d};
       },
       par},
  };
}

// The two cubic forms whose printed numerators disagree with the contrapedal
// definition, with the single sign that differs flipped.
inline std::vector<ClosedForm> corrected_forms() {
  auto cub2 = [](double t) { return 9 * t * t + 6; };
  auto cub4 = [](double t) { return 9 * t * t * t * t + 6 * t * t; };
  return {
      {"ex3 Q=(1,2) corrected", "cubic-ex3", {1, 2}, Kind::Contrapedal,
       [=](double t) {
         const double d = cub4(t), t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t7 = t5 * t2;
         return MVec2{(3 * t5 + 9 * t4 + 4 * t3 - 1) / d, (9 * t7 + 15 * t5 + 4 * t3 + 3 * t2 - 1) / d};
       },
       cub4},
      {"ex3 Q=(0,0) corrected", "cubic-ex3", {0, 0}, Kind::Contrapedal,
       [=](double t) {
         const double d = cub2(t), t3 = t * t * t, t5 = t3 * t * t;
         return MVec2{(3 * t3 + 4 * t) / d, (9 * t5 + 15 * t3 + 4 * t) / d};
       },
       cub2},
  };
}

/// Parameters spread over the open domain, keeping |denom| relatively large.
inline std::vector<double> pole_free_parameters(const ClosedForm& cf, Interval dom, int n) {
  std::vector<double> ts;
  double dmax = 0.0;
  for (int i = 0; i <= 1000; ++i) dmax = std::max(dmax, std::abs(cf.denom(dom.lo + dom.length() * i / 1000.0)));
  for (int k = 0; ts.size() < static_cast<std::size_t>(n); ++k) {
    const double t = dom.lo + dom.length() * (k + 0.5) / (n + 20.0);
    if (t >= dom.hi) break;
    if (std::abs(cf.denom(t)) > 1e-2 * dmax) ts.push_back(t);
  }
  return ts;
}

inline MVec2 library_value(const ClosedForm& cf, double t) {
  const CurveDef c = builtin(cf.curve);
  const EvaluatedPoint p = cf.kind == Kind::Pedal ? pedal(c, cf.q, t) : contrapedal(c, cf.q, t);
  return p.position.value();
}

inline std::string format_coeff(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  return v < 0 ? "(" + s + ")" : s;
}

/// Smooth random curves from a few families, on [-1, 1] or [0, 2pi].
inline CurveDef random_curve(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto c = [&](double lo, double hi) { return format_coeff(lo + (hi - lo) * 0.5 * (u(rng) + 1.0)); };
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return CurveDef::parse("t + " + c(-0.4, 0.4) + "*t^2 + " + c(-0.3, 0.3) + "*t^3",
                             c(-1, 1) + "*t + " + c(-1.5, 1.5) + "*t^2 + " + c(-1, 1) + "*t^3", {-1, 1},
                             "random-poly");
    case 1:
      return CurveDef::parse(c(0.5, 3) + "*cos(t) + " + c(-1, 1), c(0.5, 3) + "*sin(t) + " + c(-1, 1),
                             {0, 2 * kPi}, "random-ellipse");
    case 2:
      return CurveDef::parse("t + " + c(-0.3, 0.3) + "*sin(" + c(1, 3) + "*t)",
                             c(-1, 1) + "*exp(" + c(-1, 1) + "*t) + " + c(-1, 1) + "*t^2", {-1, 1},
                             "random-exp");
    case 3:
      return CurveDef::parse("sqrt(1 + t^2) + " + c(-1, 1) + "*t", c(0.3, 2) + "*t + " + c(-1, 1) + "*cos(t)",
                             {-1, 1}, "random-sqrt");
    default: {
      const auto names = builtin_names();
      return builtin(names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)]);
    }
  }
}

struct Triple {
  CurveDef curve;
  MVec2 q;
  double t;
};

/// Random (curve, Q, t) with gamma(t) comfortably away from lightlike.
inline std::vector<Triple> random_triples(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0), qd(-3.0, 3.0);
  std::vector<Triple> out;
  while (out.size() < static_cast<std::size_t>(n)) {
    CurveDef c = random_curve(rng);
    const Interval d = c.domain();
    const double t = d.lo + d.length() * u(rng);
    TangentialData td;
    try {
      td = tangential_data(c, t);
    } catch (const Error&) {
      continue;
    }
    if (td.speed_sq() < 1e-2 || std::abs(4 * td.alpha * td.beta) < 1e-2 * td.speed_sq()) continue;
    out.push_back({std::move(c), {qd(rng), qd(rng)}, t});
  }
  return out;
}

/// Solve both derivative coefficients of the contrapedal for Q at parameter t
/// by Newton iteration with a finite-difference Jacobian. Returns Q when the
/// residual vanishes to round-off.
inline std::optional<MVec2> scan_singular_q(const ParametricCurve& c, double t, MVec2 q0 = {0, 0}) {
  const TangentialData td = tangential_data(c, t);
  auto residual = [&](MVec2 q) {
    const CpeCoefficients k = cpe_coefficients(td, q);
    return MVec2{k.first, k.second};
  };
  MVec2 q = q0;
  for (int it = 0; it < 50; ++it) {
    const MVec2 r = residual(q);
    if (euclid_norm(r) < 1e-14 * std::max(1.0, euclid_norm(td.dgamma))) return q;
    const double h = 1e-6 * std::max(1.0, euclid_norm(q));
    const MVec2 j1 = (1.0 / h) * (residual(q + MVec2{h, 0}) - r);
    const MVec2 j2 = (1.0 / h) * (residual(q + MVec2{0, h}) - r);
    const double det = j1.x1 * j2.x2 - j2.x1 * j1.x2;
    if (std::abs(det) < 1e-300) return std::nullopt;
    q = q - MVec2{(r.x1 * j2.x2 - j2.x1 * r.x2) / det, (j1.x1 * r.x2 - r.x1 * j1.x2) / det};
  }
  return std::nullopt;
}

/// Random expressions in t from the full DSL grammar. Partial functions are
/// guarded so that most draws evaluate cleanly; callers still reject draws
/// that raise DomainError or blow up.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  Expr operator()(int depth) { return gen(depth); }

 private:
  Expr leaf() {
    switch (pick(4)) {
      case 0:
      case 1:
        return Expr::variable();
      case 2:
        return Expr::pi();
      default:
        return literal(std::round(std::uniform_real_distribution<double>(-3, 3)(rng_) * 100) / 100);
    }
  }

  // negative literals in the shape the parser builds them
  static Expr literal(double v) {
    return std::signbit(v) ? Expr::unary(Op::Neg, Expr::constant(-v)) : Expr::constant(v);
  }

  Expr positive(Expr e) {
    // 1 + e^2 > 0
    return Expr::binary(Op::Add, Expr::constant(1.0), Expr::binary(Op::Pow, std::move(e), Expr::constant(2.0)));
  }

  Expr gen(int depth) {
    if (depth <= 0 || pick(5) == 0) return leaf();
    switch (pick(13)) {
      case 0:
        return Expr::unary(Op::Neg, gen(depth - 1));
      case 1:
      case 2:
        return Expr::binary(Op::Add, gen(depth - 1), gen(depth - 1));
      case 3:
        return Expr::binary(Op::Sub, gen(depth - 1), gen(depth - 1));
      case 4:
      case 5:
        return Expr::binary(Op::Mul, gen(depth - 1), gen(depth - 1));
      case 6:
        return Expr::binary(Op::Div, gen(depth - 1), positive(gen(depth - 1)));
      case 7:
        return Expr::binary(Op::Pow, gen(depth - 1),
                            literal(static_cast<double>(std::uniform_int_distribution<int>(-2, 4)(rng_))));
      case 8:
        return Expr::binary(Op::Pow, positive(gen(depth - 1)),
                            literal(std::uniform_real_distribution<double>(-1.5, 1.5)(rng_)));
      case 9:
        return Expr::unary(Op::Sin, gen(depth - 1));
      case 10:
        return Expr::unary(Op::Cos, gen(depth - 1));
      case 11:
        return Expr::unary(pick(2) ? Op::Sqrt : Op::Ln, positive(gen(depth - 1)));
      default:
        return Expr::unary(Op::Exp, Expr::unary(Op::Sin, gen(depth - 1)));
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
};

struct JetCheck {
  double max_ratio[3] = {0, 0, 0};  // worst |jet - fd| / (bound * scale) per order
  int accepted = 0;
  int rejected = 0;
};

// Fixed-step central differences of orders 1-3; truncation error is bounded
// by derivatives two orders higher, taken from an order-5 jet.
inline JetCheck jet_vs_finite_differences(int count, std::uint64_t seed) {
  constexpr double kStep[3] = {1e-5, 1e-4, 1e-3};
  constexpr double kBound[3] = {1e-6, 1e-5, 1e-4};
  ExprGen gen(seed);
  std::mt19937_64 trng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> tdist(-1.5, 1.5);
  JetCheck out;
  while (out.accepted < count) {
    const Expr e = gen(4);
    const double t0 = tdist(trng);
    try {
      const Jet<5> j = eval<5>(e, t0);
      bool tame = true;
      for (int k = 0; k <= 5; ++k) tame = tame && std::isfinite(j.d(k)) && std::abs(j.d(k)) < 1e6;
      if (!tame) {
        ++out.rejected;
        continue;
      }
      auto f = [&](double t) { return eval<0>(e, t).value(); };
      for (int order = 1; order <= 3; ++order) {
        const double h = kStep[order - 1];
        double fd = 0.0;
        if (order == 1) fd = (f(t0 + h) - f(t0 - h)) / (2 * h);
        if (order == 2) fd = (f(t0 + h) - 2 * f(t0) + f(t0 - h)) / (h * h);
        if (order == 3) fd = (f(t0 + 2 * h) - 2 * f(t0 + h) + 2 * f(t0 - h) - f(t0 - 2 * h)) / (2 * h * h * h);
        const double scale = std::max({1.0, std::abs(j.value()), std::abs(j.d(order + 2))});
        const double ratio = std::abs(j.d(order) - fd) / (kBound[order - 1] * scale);
        out.max_ratio[order - 1] = std::max(out.max_ratio[order - 1], ratio);
      }
      ++out.accepted;
    } catch (const DomainError&) {
      ++out.rejected;
    }
  }
  return out;
}

}  // namespace mixcurve::testing
