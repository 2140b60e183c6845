#include "mixcurve/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "mixcurve/errors.hpp"
#include "mixcurve/tolerance.hpp"

namespace mixcurve {

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::LightlikePoint:
      return "lightlike_point";
    case EventKind::Inflection:
      return "inflection";
    case EventKind::OrdinaryInflection:
      return "ordinary_inflection";
  }
  return "?";
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::AlphaZero:
      return "alpha_zero";
    case Branch::BetaZero:
      return "beta_zero";
    case Branch::NotApplicable:
      return "not_applicable";
  }
  return "?";
}

TangentialData tangential_data(const CurveJet& j) {
  TangentialData td;
  td.gamma = j.position();
  td.dgamma = j.velocity();
  require_finite(td.gamma, "curve position");
  require_finite(td.dgamma, "curve velocity");
  td.alpha = (j.x.d(1) + j.y.d(1)) / 2.0;
  td.beta = (j.x.d(1) - j.y.d(1)) / 2.0;
  td.dalpha = (j.x.d(2) + j.y.d(2)) / 2.0;
  td.dbeta = (j.x.d(2) - j.y.d(2)) / 2.0;
  td.ddalpha = (j.x.d(3) + j.y.d(3)) / 2.0;
  td.ddbeta = (j.x.d(3) - j.y.d(3)) / 2.0;
  if (std::abs(td.alpha) + std::abs(td.beta) < tol::kRegularity) {
    throw RegularityError("curve is not regular (vanishing velocity)");
  }
  return td;
}

TangentialData tangential_data(const ParametricCurve& c, double t) {
  if (!std::isfinite(t)) throw InputError("non-finite parameter");
  return tangential_data(c.jet(t));
}

bool is_lightlike(const TangentialData& td) {
  return std::abs(4.0 * td.alpha * td.beta) <= tol::kLightlike * td.speed_sq();
}

Branch lightlike_branch(const TangentialData& td) {
  return std::abs(td.beta) <= std::abs(td.alpha) ? Branch::BetaZero : Branch::AlphaZero;
}

bool is_inflection(const TangentialData& td) {
  const double scale = euclid_norm(td.dgamma) * euclid_norm(td.ddgamma());
  return std::abs(td.inflection_value()) <= tol::kLightlike * scale;
}

bool is_ordinary_inflection(const TangentialData& td) {
  const double scale = euclid_norm(td.dgamma) * euclid_norm(td.dddgamma());
  return is_inflection(td) && std::abs(td.inflection_rate()) > tol::kLightlike * scale;
}

PointClass classify_point(const ParametricCurve& c, double t) {
  const TangentialData td = tangential_data(c, t);
  PointClass pc;
  pc.causal = causal_type(td.dgamma);
  if (is_ordinary_inflection(td))
    pc.inflection = Inflection::Ordinary;
  else if (is_inflection(td))
    pc.inflection = Inflection::Inflection;
  else
    pc.inflection = Inflection::None;
  return pc;
}

namespace {

using Scalar = std::function<double(const TangentialData&)>;

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Root of g on [a, b] given g(a)·g(b) <= 0.
double bisect(const ParametricCurve& c, const Scalar& g, double a, double b) {
  double ga = g(tangential_data(c, a));
  if (ga == 0.0) return a;
  const double gb = g(tangential_data(c, b));
  if (gb == 0.0) return b;
  while (b - a > tol::kEventStep) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(tangential_data(c, m));
    if (gm == 0.0) return m;
    if (sign(gm) == sign(ga)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

struct Candidate {
  double t;
  std::optional<Branch> lightlike;  // set when alpha or beta vanishes here
  bool inflection = false;
};

void collect_roots(const ParametricCurve& c, const std::vector<double>& ts,
                   const std::vector<TangentialData>& s, const Scalar& g,
                   const std::function<void(double)>& emit) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double gi = g(s[i]);
    if (gi == 0.0) {
      emit(ts[i]);
      continue;
    }
    if (i + 1 < ts.size()) {
      const double gn = g(s[i + 1]);
      if (gn != 0.0 && sign(gi) != sign(gn)) emit(bisect(c, g, ts[i], ts[i + 1]));
    }
  }
}

// Zeros of g touched without a sign change: local minima of |g| at which the
// derivative dg changes sign.
void collect_tangencies(const ParametricCurve& c, const std::vector<double>& ts,
                        const std::vector<TangentialData>& s, const Scalar& g, const Scalar& dg,
                        const std::function<void(double)>& emit) {
  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    const double gp = g(s[i - 1]), gi = g(s[i]), gn = g(s[i + 1]);
    if (std::abs(gi) > std::abs(gp) || std::abs(gi) > std::abs(gn)) continue;
    if (sign(gp) != sign(gi) || sign(gi) != sign(gn)) continue;  // handled by bracketing
    double a = ts[i - 1], b = ts[i + 1];
    const double dgi = dg(s[i]);
    if (dgi == 0.0) {
      a = b = ts[i];
    } else if (sign(dg(s[i - 1])) != sign(dgi)) {
      b = ts[i];
    } else if (sign(dg(s[i + 1])) != sign(dgi)) {
      a = ts[i];
    } else {
      continue;
    }
    const double root = a == b ? a : bisect(c, dg, a, b);
    if (is_lightlike(tangential_data(c, root))) emit(root);
  }
}

}  // namespace

std::vector<ParamEvent> find_events(const ParametricCurve& c, int grid_n, Execution exec) {
  if (grid_n < 16) throw InputError("find_events: grid_n must be at least 16");
  const Interval dom = c.domain();
  const auto nodes = static_cast<std::size_t>(grid_n) + 1;
  std::vector<double> ts(nodes);
  for (std::size_t i = 0; i < nodes; ++i)
    ts[i] = i + 1 == nodes ? dom.hi : dom.lo + dom.length() * static_cast<double>(i) / grid_n;
  const auto samples = index_map<TangentialData>(
      nodes, [&](std::size_t i) { return tangential_data(c, ts[i]); }, exec);

  const Scalar alpha = [](const TangentialData& td) { return td.alpha; };
  const Scalar beta = [](const TangentialData& td) { return td.beta; };
  const Scalar dalpha = [](const TangentialData& td) { return td.dalpha; };
  const Scalar dbeta = [](const TangentialData& td) { return td.dbeta; };
  const Scalar infl = [](const TangentialData& td) { return td.inflection_value(); };

  std::vector<Candidate> cands;
  auto lightlike_at = [&](Branch b) {
    return [&cands, b](double t) { cands.push_back({t, b, false}); };
  };
  collect_roots(c, ts, samples, alpha, lightlike_at(Branch::AlphaZero));
  collect_roots(c, ts, samples, beta, lightlike_at(Branch::BetaZero));
  collect_tangencies(c, ts, samples, alpha, dalpha, lightlike_at(Branch::AlphaZero));
  collect_tangencies(c, ts, samples, beta, dbeta, lightlike_at(Branch::BetaZero));
  collect_roots(c, ts, samples, infl,
                [&cands](double t) { cands.push_back({t, std::nullopt, true}); });

  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.t < b.t; });

  // Merge clusters. Inflection roots from bisection are kept as the cluster
  // parameter when present since they are located to kEventStep directly.
  std::vector<ParamEvent> events;
  for (std::size_t i = 0; i < cands.size();) {
    std::size_t j = i;
    std::optional<Branch> branch;
    std::optional<double> infl_t, light_t;
    while (j < cands.size() && cands[j].t - cands[i].t <= tol::kEventMerge) {
      if (cands[j].inflection && !infl_t) infl_t = cands[j].t;
      if (cands[j].lightlike && !branch) {
        branch = cands[j].lightlike;
        light_t = cands[j].t;
      }
      ++j;
    }
    i = j;
    const double t = infl_t ? *infl_t : *light_t;
    if (!dom.contains(t)) continue;
    ParamEvent ev{t, EventKind::LightlikePoint, branch.value_or(Branch::NotApplicable)};
    if (infl_t) {
      const TangentialData td = tangential_data(c, t);
      ev.kind = is_ordinary_inflection(td) ? EventKind::OrdinaryInflection : EventKind::Inflection;
    }
    events.push_back(ev);
  }
  return events;
}

}  // namespace mixcurve
