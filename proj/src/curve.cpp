#include "mixcurve/curve.hpp"

#include <cmath>
#include <numbers>

#include "mixcurve/errors.hpp"

namespace mixcurve {

CurveDef::CurveDef(Expr x, Expr y, Interval domain, std::optional<std::string> name)
    : x_(std::move(x)), y_(std::move(y)), domain_(domain), name_(std::move(name)) {
  if (!std::isfinite(domain_.lo) || !std::isfinite(domain_.hi) || !(domain_.lo < domain_.hi)) {
    throw InputError("curve domain must be a finite interval with t_min < t_max");
  }
}

CurveDef CurveDef::parse(std::string_view x_src, std::string_view y_src, Interval domain,
                         std::optional<std::string> name) {
  return CurveDef(mixcurve::parse(x_src), mixcurve::parse(y_src), domain, std::move(name));
}

CurveJet CurveDef::jet(double t) const { return {eval<3>(x_, t), eval<3>(y_, t)}; }

std::string CurveDef::name() const {
  if (name_) return *name_;
  return "(" + to_string(x_) + ", " + to_string(y_) + ")";
}

CurveDef builtin(std::string_view name) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (name == "ellipse-ex1")
    return CurveDef::parse("2*cos(t)", "(2*sqrt(3)/3)*sin(t)", {0.0, two_pi}, std::string(name));
  if (name == "parabola-ex2") return CurveDef::parse("t", "t^2", {-1.0, 1.0}, std::string(name));
  if (name == "cubic-ex3") return CurveDef::parse("t", "t^3+t", {-1.0, 1.0}, std::string(name));
  throw UnknownCurve("unknown builtin curve '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"ellipse-ex1", "parabola-ex2", "cubic-ex3"}; }

}  // namespace mixcurve
