#include "mixcurve/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "mixcurve/errors.hpp"

namespace mixcurve::oracle {

MVec2 foot_on_line(MVec2 q, const Line& line) {
  require_finite(q, "foot_on_line q");
  require_finite(line.base, "foot_on_line base");
  require_finite(line.direction, "foot_on_line direction");
  if (line.direction == MVec2{}) throw InputError("foot_on_line: zero direction");
  const double dd = pseudo_dot(line.direction, line.direction);
  if (dd == 0.0) throw LightlikeLine("no pseudo-orthogonal foot on a lightlike line");
  const double s = pseudo_dot(q - line.base, line.direction) / dd;
  return line.base + s * line.direction;
}

namespace {

constexpr double kAgree = 1e-7;
constexpr double kFloorStep = 1e-7;
constexpr int kMaxColumns = 5;

MVec2 central_difference(const CurveFn& f, double t, int order, double h) {
  switch (order) {
    case 1:
      return (1.0 / (2.0 * h)) * (f(t + h) - f(t - h));
    case 2:
      return (1.0 / (h * h)) * (f(t + h) - 2.0 * f(t) + f(t - h));
    case 3:
      return (1.0 / (2.0 * h * h * h)) *
             (f(t + 2.0 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2.0 * h));
    default:
      throw InputError("numeric_derivative: order must be 1, 2 or 3");
  }
}

}  // namespace

MVec2 numeric_derivative(const CurveFn& f, double t, int order, double h0) {
  if (order < 1 || order > 3) throw InputError("numeric_derivative: order must be 1, 2 or 3");
  if (!(h0 > 0.0)) throw InputError("numeric_derivative: initial step must be positive");

  // rows[i][j]: estimate from step h0/2^i after j Richardson eliminations (ratio 4).
  std::vector<std::array<MVec2, kMaxColumns + 1>> rows;
  MVec2 previous{};
  MVec2 best{};
  double best_diff = std::numeric_limits<double>::infinity();
  int worsening = 0;
  double h = h0;
  for (int i = 0;; ++i, h *= 0.5) {
    if (h < kFloorStep) throw NoConvergence("numeric_derivative: floor step reached");
    std::array<MVec2, kMaxColumns + 1> row{};
    row[0] = central_difference(f, t, order, h);
    const int cols = std::min(i, kMaxColumns);
    double factor = 4.0;
    for (int j = 1; j <= cols; ++j, factor *= 4.0)
      row[j] = row[j - 1] + (1.0 / (factor - 1.0)) * (row[j - 1] - rows[i - 1][j - 1]);
    rows.push_back(row);
    const MVec2 estimate = row[cols];
    require_finite(estimate, "numeric_derivative estimate");
    if (i > 0) {
      const double diff = euclid_norm(estimate - previous);
      const double scale = std::max(1.0, euclid_norm(estimate));
      if (diff <= kAgree * scale) return estimate;
      if (diff < best_diff) {
        best_diff = diff;
        best = estimate;
        worsening = 0;
      } else if (++worsening >= 3) {
        // round-off dominates from here on
        if (best_diff <= 1e-5 * std::max(1.0, euclid_norm(best))) return best;
        throw NoConvergence("numeric_derivative: estimates oscillate above tolerance");
      }
    }
    previous = estimate;
  }
}

namespace {

constexpr double kLimitStep = 1e-2;
constexpr int kLimitLevels = 20;
constexpr int kLimitColumns = 6;
constexpr double kSideAgreement = 1e-5;

MVec2 one_sided_limit(const CurveFn& f, double t0, double direction) {
  std::vector<MVec2> samples;
  samples.reserve(kLimitLevels + 1);
  double s = kLimitStep;
  for (int k = 0; k <= kLimitLevels; ++k, s *= 0.5) {
    const MVec2 v = f(t0 + direction * s);
    if (!std::isfinite(v.x1) || !std::isfinite(v.x2))
      throw Divergent("limit_estimate: non-finite sample");
    samples.push_back(v);
  }

  // A 1/s blow-up doubles the magnitude at every halving.
  const double first = euclid_norm(samples.front());
  const double last = euclid_norm(samples.back());
  int doubling = 0;
  for (int k = kLimitLevels - 9; k <= kLimitLevels; ++k) {
    const double prev = euclid_norm(samples[static_cast<std::size_t>(k - 1)]);
    if (euclid_norm(samples[static_cast<std::size_t>(k)]) > 1.5 * prev) ++doubling;
  }
  if (last > 1e3 * (1.0 + first) && doubling >= 8)
    throw Divergent("limit_estimate: samples grow without bound");

  // Richardson in powers of s with ratio 2; keep the diagonal estimate whose
  // change from the previous level is smallest.
  std::vector<std::array<MVec2, kLimitColumns + 1>> tab(samples.size());
  MVec2 best = samples.back();
  double best_change = std::numeric_limits<double>::infinity();
  MVec2 prev_diag{};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    tab[k][0] = samples[k];
    const int cols = std::min(static_cast<int>(k), kLimitColumns);
    double factor = 2.0;
    for (int j = 1; j <= cols; ++j, factor *= 2.0)
      tab[k][j] = tab[k][j - 1] + (1.0 / (factor - 1.0)) * (tab[k][j - 1] - tab[k - 1][j - 1]);
    const MVec2 diag = tab[k][cols];
    if (k > 0) {
      const double change = euclid_norm(diag - prev_diag);
      if (change < best_change) {
        best_change = change;
        best = diag;
      }
    }
    prev_diag = diag;
  }
  return best;
}

}  // namespace

MVec2 limit_estimate(const CurveFn& f, double t0, Side side) {
  if (!std::isfinite(t0)) throw InputError("limit_estimate: non-finite t0");
  switch (side) {
    case Side::Left:
      return one_sided_limit(f, t0, -1.0);
    case Side::Right:
      return one_sided_limit(f, t0, +1.0);
    case Side::Both: {
      const MVec2 l = one_sided_limit(f, t0, -1.0);
      const MVec2 r = one_sided_limit(f, t0, +1.0);
      const double scale = std::max({1.0, euclid_norm(l), euclid_norm(r)});
      if (euclid_norm(l - r) > kSideAgreement * scale)
        throw Divergent("limit_estimate: one-sided limits disagree");
      return 0.5 * (l + r);
    }
  }
  throw InputError("limit_estimate: bad side");
}

}  // namespace mixcurve::oracle
