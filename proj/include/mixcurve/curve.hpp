#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixcurve/expr.hpp"
#include "mixcurve/jet.hpp"
#include "mixcurve/mink.hpp"

namespace mixcurve {

/// Closed parameter interval [lo, hi], lo < hi.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double t) const { return t >= lo && t <= hi; }
  double length() const { return hi - lo; }
};

/// Jets of both components of a plane curve at one parameter.
struct CurveJet {
  Jet3 x;
  Jet3 y;

  MVec2 position() const { return {x.value(), y.value()}; }
  MVec2 velocity() const { return {x.d(1), y.d(1)}; }
  MVec2 acceleration() const { return {x.d(2), y.d(2)}; }
  MVec2 jerk() const { return {x.d(3), y.d(3)}; }
};

/// Anything that can hand out order-3 jets of its position.
/// Implementations are immutable and safe to evaluate concurrently.
class ParametricCurve {
 public:
  virtual ~ParametricCurve() = default;
  virtual Interval domain() const = 0;
  virtual CurveJet jet(double t) const = 0;
  virtual std::string name() const = 0;

  MVec2 position(double t) const { return jet(t).position(); }
};

/// Parametric curve given by two DSL expressions in t.
class CurveDef final : public ParametricCurve {
 public:
  CurveDef(Expr x, Expr y, Interval domain, std::optional<std::string> name = std::nullopt);

  /// Parse both component expressions; errors carry source positions.
  static CurveDef parse(std::string_view x_src, std::string_view y_src, Interval domain,
                        std::optional<std::string> name = std::nullopt);

  Interval domain() const override { return domain_; }
  CurveJet jet(double t) const override;
  std::string name() const override;

  template <int N>
  std::pair<Jet<N>, Jet<N>> jet_n(double t) const {
    return {eval<N>(x_, t), eval<N>(y_, t)};
  }

  const Expr& x_expr() const { return x_; }
  const Expr& y_expr() const { return y_; }
  CurveDef with_domain(Interval d) const { return CurveDef(x_, y_, d, name_); }

 private:
  Expr x_;
  Expr y_;
  Interval domain_;
  std::optional<std::string> name_;
};

/// Example curves: "ellipse-ex1", "parabola-ex2", "cubic-ex3".
CurveDef builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace mixcurve
